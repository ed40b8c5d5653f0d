#include "primewit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "primewit/chains.hpp"
#include "primewit/extraction.hpp"
#include "primewit/families.hpp"
#include "primewit/graph6.hpp"
#include "primewit/homogeneous.hpp"
#include "primewit/serialize.hpp"

namespace primewit::cli {
namespace {

using json = nlohmann::ordered_json;

struct LineResult {
  std::string out;
  std::string err;
  bool failed = false;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return lines;
}

// Runs f over every line on up to `jobs` threads; results keep input order.
template <class F>
std::vector<LineResult> map_lines(const std::vector<std::string>& lines, int jobs, F f) {
  std::vector<LineResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < lines.size();) results[i] = f(i + 1, lines[i]);
  };
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || lines.size() < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(threads, lines.size()); ++t) pool.emplace_back(work);
  }
  return results;
}

int emit(const std::vector<LineResult>& results, std::ostream& out, std::ostream& err) {
  int code = kOk;
  for (const auto& r : results) {
    out << r.out << '\n';
    if (!r.err.empty()) err << r.err << '\n';
    if (r.failed) code = kDataError;
  }
  return code;
}

std::string line_error(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

std::string bracketed(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string as_text(const DriverResult& r) {
  struct {
    std::string operator()(const Witness& w) const {
      return format_family_spec(w.family) + " " + bracketed(w.embedding) + " " + w.provenance;
    }
    std::string operator()(const ChainWitness& w) const {
      return "prime-chain:" + std::to_string(w.chain.length()) + " " + bracketed(w.chain.seq) +
             " " + w.provenance;
    }
    std::string operator()(const InsufficientSize& s) const {
      return "insufficient " + s.stage + " needed=" + s.needed + " had=" + std::to_string(s.had);
    }
    std::string operator()(const NonPrime& np) const {
      return "homogeneous " + format_vertex_set(np.set);
    }
  } visitor;
  return std::visit(visitor, r);
}

Graph labeled_graph(int n, std::uint64_t code) {
  GraphBuilder b(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((code >> k) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

Graph sampled_graph(int n, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

json prime_sweep(const VerifyOptions& opts, std::uint64_t& disagreements) {
  json rows = json::array();
  std::mt19937_64 rng(opts.seed);
  for (int n = 0; n <= opts.max_vertices; ++n) {
    const bool exhaustive = n <= kVerifyExhaustiveMax;
    const std::uint64_t count = exhaustive ? (1ULL << (n * (n - 1) / 2)) : opts.samples;
    std::uint64_t prime = 0;
    std::uint64_t bad = 0;
    for (std::uint64_t c = 0; c < count; ++c) {
      const Graph g = exhaustive ? labeled_graph(n, c) : sampled_graph(n, rng);
      const bool fast = !find_homogeneous_set(g).has_value();
      const bool brute = brute_force_homogeneous(g).empty();
      if (fast != brute) ++bad;
      if (is_prime(g)) ++prime;
    }
    disagreements += bad;
    rows.push_back({{"order", n},
                    {"graphs", count},
                    {"exhaustive", exhaustive},
                    {"prime", prime},
                    {"disagreements", bad}});
  }
  return rows;
}

json chain_sweep(const VerifyOptions& opts, std::uint64_t& disagreements) {
  const int top = std::min(opts.max_vertices, kVerifyExhaustiveMax);
  std::uint64_t cases = 0;
  std::uint64_t bad = 0;
  for (int n = 3; n <= top; ++n) {
    for (std::uint64_t code = 0; code < (1ULL << (n * (n - 1) / 2)); ++code) {
      const Graph g = labeled_graph(n, code);
      const auto sets = brute_force_homogeneous(g);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const VertexSet source(n, {a, b});
          for (int v = 0; v < n; ++v) {
            if (v == a || v == b) continue;
            const bool separated = std::any_of(sets.begin(), sets.end(), [&](const VertexSet& s) {
              return s.contains(a) && s.contains(b) && !s.contains(v);
            });
            const bool chain = find_chain(g, source, v).has_value();
            ++cases;
            if (chain == separated) ++bad;
          }
        }
    }
  }
  disagreements += bad;
  return {{"max_order", top}, {"cases", cases}, {"disagreements", bad}};
}

// Exact containment by trying every vertex subset of the pattern's size.
bool contains_by_subsets(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (are_isomorphic(induced_subgraph(host, pick).graph, pattern)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<FamilyId> matrix_families(int n) {
  std::vector<FamilyId> out;
  for (FamilyKind k : {FamilyKind::kSubdividedStar, FamilyKind::kLineK2n, FamilyKind::kHalfGraph,
                       FamilyKind::kHalfSplitApex, FamilyKind::kHalfSplitPendant})
    for (bool c : {false, true}) out.push_back({k, n, c});
  out.push_back({FamilyKind::kThinSpider, n, false});
  out.push_back({FamilyKind::kThickSpider, n, false});
  return out;
}

json containment_matrix(const VerifyOptions& opts, std::uint64_t& disagreements) {
  json cells = json::array();
  std::uint64_t bad = 0;
  for (const FamilyId& host_id : matrix_families(opts.matrix_host)) {
    const Graph host = generate(host_id).graph;
    for (const FamilyId& pat_id : matrix_families(opts.matrix_pattern)) {
      const bool search = find_induced_copy(host, pat_id).has_value();
      const bool subsets = contains_by_subsets(host, generate(pat_id).graph);
      if (search != subsets) ++bad;
      cells.push_back({{"host", format_family_spec(host_id)},
                       {"pattern", format_family_spec(pat_id)},
                       {"present", search},
                       {"agree", search == subsets}});
    }
  }
  disagreements += bad;
  return {{"host_n", opts.matrix_host},
          {"pattern_n", opts.matrix_pattern},
          {"cells", cells},
          {"disagreements", bad}};
}

}  // namespace

int cmd_gen(const std::string& spec, std::ostream& out, std::ostream& err) {
  const auto id = parse_family_spec(spec);
  if (!id) {
    err << "gen: '" << spec << "' is not a family spec (expected e.g. half-graph:5 or thin-spider:4!)\n";
    return kUsageError;
  }
  try {
    out << emit_graph6(generate(*id).graph) << '\n';
  } catch (const std::out_of_range& e) {
    err << "gen: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

int cmd_prime(std::istream& in, std::ostream& out, std::ostream& err, int jobs) {
  const auto results = map_lines(read_lines(in), jobs, [](std::size_t no, const std::string& line) {
    LineResult r;
    try {
      const Graph g = parse_graph6(line);
      const auto h = find_homogeneous_set(g);
      if (!h && g.order() > 2) {
        r.out = "prime";
      } else {
        r.out = "homogeneous " + format_vertex_set(h ? *h : VertexSet(g.order()));
      }
    } catch (const Graph6Error& e) {
      r.out = "error";
      r.err = line_error(no, e.what());
      r.failed = true;
    }
    return r;
  });
  return emit(results, out, err);
}

int cmd_witness(std::istream& in, std::ostream& out, std::ostream& err,
                const WitnessOptions& opts) {
  DriverOptions driver;
  driver.fast_path = opts.fast_path;
  const auto results = map_lines(read_lines(in), opts.jobs, [&](std::size_t no,
                                                                 const std::string& line) {
    LineResult r;
    try {
      const Graph g = parse_graph6(line);
      const DriverResult w = unavoidable_witness(g, opts.n, driver);
      r.out = opts.json ? to_json(w).dump() : as_text(w);
    } catch (const std::exception& e) {
      r.err = line_error(no, e.what());
      r.out = opts.json ? json{{"error", r.err}}.dump() : "error";
      r.failed = true;
    }
    return r;
  });
  return emit(results, out, err);
}

int cmd_verify(std::ostream& out, std::ostream& err, const VerifyOptions& opts) {
  if (opts.max_vertices < 1 || opts.max_vertices > kVerifyMaxVertices) {
    err << "verify: --max-vertices must be in 1.." << kVerifyMaxVertices << '\n';
    return kUsageError;
  }
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t disagreements = 0;
  json report;
  report["max_vertices"] = opts.max_vertices;
  report["seed"] = opts.seed;
  report["primality"] = prime_sweep(opts, disagreements);
  report["chains"] = chain_sweep(opts, disagreements);
  report["containment"] = containment_matrix(opts, disagreements);
  report["disagreements"] = disagreements;
  report["seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << report.dump() << '\n';
  return disagreements == 0 ? kOk : kDataError;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Prime graph witnesses: primality, family generators and extraction"};
  app.require_subcommand(1);

  std::string spec;
  auto* gen = app.add_subcommand("gen", "Print a family member as graph6");
  gen->add_option("spec", spec, "family spec, e.g. half-graph:5 or thin-spider:4!")->required();

  int jobs = 1;
  auto* prime = app.add_subcommand("prime", "Primality verdict for each graph6 line on stdin");
  prime->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  WitnessOptions wopts;
  bool no_fast_path = false;
  auto* witness = app.add_subcommand("witness", "Unavoidable witness for each graph6 line");
  witness->add_option("--n", wopts.n, "family size")->required()->check(CLI::Range(3, kMaxFamilySize));
  witness->add_flag("--json", wopts.json, "JSON lines output");
  witness->add_flag("--no-fast-path", no_fast_path, "skip the direct family search");
  witness->add_option("--jobs", wopts.jobs, "worker threads")->check(CLI::Range(1, 256));

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Exhaustive oracle agreement sweeps");
  verify->add_option("--max-vertices", vopts.max_vertices, "largest order swept")->required();
  verify->add_option("--seed", vopts.seed, "seed for sampled orders");
  verify->add_option("--samples", vopts.samples, "graphs sampled per order above 6");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (*gen) return cmd_gen(spec, out, err);
  if (*prime) return cmd_prime(in, out, err, jobs);
  if (*witness) {
    wopts.fast_path = !no_fast_path;
    return cmd_witness(in, out, err, wopts);
  }
  return cmd_verify(out, err, vopts);
}

}  // namespace primewit::cli
