#include "primewit/extraction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "primewit/cliques.hpp"
#include "primewit/families.hpp"
#include "primewit/homogeneous.hpp"
#include "primewit/ramsey.hpp"

namespace primewit {
namespace {

std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

Witness checked(const Graph& g, FamilyId id, std::vector<int> emb, std::string provenance) {
  Witness w{id, std::move(emb), std::move(provenance)};
  if (!validate_witness(g, w))
    throw std::logic_error("extraction produced an invalid " + format_family_spec(id) +
                           " witness " + set_text(w.embedding) + " (" + w.provenance + ")");
  return w;
}

// Witness for `id` on exactly the given host vertices.
Witness witness_on(const Graph& g, FamilyId id, const std::vector<int>& vertices,
                   std::string provenance) {
  const auto sub = induced_subgraph(g, vertices);
  const auto pattern = generate(id);
  const auto iso = find_isomorphism(pattern.graph, sub.graph);
  if (!iso)
    throw std::logic_error("vertex set " + set_text(vertices) + " does not induce " +
                           format_family_spec(id) + " (" + provenance + ")");
  std::vector<int> emb;
  for (int p : *iso) emb.push_back(sub.back_map[p]);
  return checked(g, id, std::move(emb), std::move(provenance));
}

Witness ab_witness(const Graph& g, FamilyId id, const std::vector<int>& a,
                   const std::vector<int>& b, std::string provenance) {
  std::vector<int> emb(a);
  emb.insert(emb.end(), b.begin(), b.end());
  return checked(g, id, std::move(emb), std::move(provenance));
}

// ---------------------------------------------------------------- triples

std::optional<RegularTriple> try_grow(const Graph& g, const RegularTriple& t) {
  int y = -1;
  for (int v = 0; v < g.order() && y < 0; ++v)
    if (is_mixed(g, v, t.a)) y = v;
  if (y < 0) return std::nullopt;
  const VertexSet ay = t.a & g.neighbors(y);
  RegularTriple out = t;
  out.y.push_back(y);
  if (2 * ay.size() >= t.a.size()) {
    out.x.push_back((t.a - ay).first());
    out.a = ay;
    out.cases.push_back(TripleCase::kNonadjacentThenComplete);
  } else {
    out.x.push_back(ay.first());
    out.a = t.a - ay;
    out.cases.push_back(TripleCase::kAdjacentThenAnticomplete);
  }
  return out;
}

std::optional<Witness> triple_case(const Graph& g, const RegularTriple& t, int a, int b,
                                   const std::vector<int>& idx, int n, int n1, int n2,
                                   const std::string& tag) {
  std::vector<int> i1, i2;
  for (int i : idx)
    (t.cases[i] == TripleCase::kAdjacentThenAnticomplete ? i1 : i2).push_back(i);
  const std::string prov = "regular-triple(" + std::to_string(a) + "," + std::to_string(b) +
                           ")" + tag;
  auto pick = [](const std::vector<int>& from, const std::vector<int>& ix, int k, int off,
                 bool reverse) {
    std::vector<int> out;
    for (int p = 0; p < k; ++p) out.push_back(from[ix[reverse ? k - 1 - p : p + off]]);
    return out;
  };
  const auto& x = t.x;
  const auto& y = t.y;
  const int s1 = static_cast<int>(i1.size());
  const int s2 = static_cast<int>(i2.size());
  if (a == 0 && b == 0) {
    if (s1 >= n1)
      return ab_witness(g, {FamilyKind::kMatching, n1, false}, pick(x, i1, n1, 0, false),
                        pick(y, i1, n1, 0, false), prov + ":I1");
    if (s2 >= n + 1)
      return ab_witness(g, {FamilyKind::kHalfGraph, n, false}, pick(x, i2, n, 1, false),
                        pick(y, i2, n, 0, false), prov + ":I2");
  } else if (a == 1 && b == 0) {
    if (s1 >= n)
      return ab_witness(g, {FamilyKind::kHalfGraph, n, false}, pick(y, i1, n, 0, false),
                        pick(x, i1, n, 0, false), prov + ":I1");
    if (s2 >= n)
      return ab_witness(g, {FamilyKind::kLineK2n, n, true}, pick(x, i2, n, 0, false),
                        pick(y, i2, n, 0, false), prov + ":I2");
  } else if (a == 0 && b == 1) {
    if (s1 >= n)
      return ab_witness(g, {FamilyKind::kThinSpider, n, false}, pick(x, i1, n, 0, false),
                        pick(y, i1, n, 0, false), prov + ":I1");
    if (s2 >= n2 + 1)
      return ab_witness(g, {FamilyKind::kHalfSplit, n2, false}, pick(x, i2, n2, 1, false),
                        pick(y, i2, n2, 0, false), prov + ":I2");
  } else {
    if (s1 >= n2) {
      const std::vector<int> head(i1.begin(), i1.begin() + n2);
      return ab_witness(g, {FamilyKind::kHalfSplit, n2, false}, pick(x, head, n2, 0, true),
                        pick(y, head, n2, 0, true), prov + ":I1");
    }
    if (s2 >= n)
      return ab_witness(g, {FamilyKind::kThickSpider, n, false}, pick(x, i2, n, 0, false),
                        pick(y, i2, n, 0, false), prov + ":I2");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- matching

// Palette order: terminal colours first, the recursive colour last.
constexpr std::array<std::array<int, 3>, 10> kMatchingColors = {{
    {2, 2, 2}, {3, 3, 3}, {1, 0, 0}, {1, 1, 1}, {1, 1, 0},
    {1, 0, 1}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 0, 0},
}};
constexpr int kRecurseColor = 9;

int color_index(int a, int b, int c) {
  for (int i = 0; i < 10; ++i)
    if (kMatchingColors[i] == std::array<int, 3>{a, b, c}) return i;
  return -1;
}

bool mixed_on_edge(const Graph& g, int w, const MatchingEdge& e) {
  return w != e.first && w != e.second && g.adjacent(w, e.first) != g.adjacent(w, e.second);
}

// Star with the given centre over edges it is mixed on.
Witness star(const Graph& g, int center, const std::vector<MatchingEdge>& edges, int n,
             const std::string& prov) {
  std::vector<int> a, b;
  for (int k = 0; k < n; ++k) {
    const auto& [p, q] = edges[k];
    const bool p_near = g.adjacent(center, p);
    a.push_back(p_near ? p : q);
    b.push_back(p_near ? q : p);
  }
  std::vector<int> emb(a);
  emb.insert(emb.end(), b.begin(), b.end());
  emb.push_back(center);
  return checked(g, {FamilyKind::kSubdividedStar, n, false}, std::move(emb), prov);
}

struct MatchingRun {
  const Graph& g;
  int v;
  int n;
  int n_prime;

  StageResult run(const std::vector<MatchingEdge>& m, const std::vector<Chain>& chains,
                  int t) {
    const std::string level = "matching(t=" + std::to_string(t) + ")";
    std::vector<MatchingEdge> len2;
    std::vector<std::size_t> m1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (chains[i].length() == 2) len2.push_back(m[i]);
      else m1.push_back(i);
    }
    if (static_cast<int>(len2.size()) >= n) return star(g, v, len2, n, level + ":short-chains");

    std::map<int, std::vector<MatchingEdge>> by_third;
    for (std::size_t i : m1) by_third[chains[i].seq[2]].push_back(m[i]);
    for (const auto& [w, es] : by_third)
      if (static_cast<int>(es.size()) >= n) return star(g, w, es, n, level + ":shared-third");

    // One edge per distinct third vertex, in input order.
    std::vector<int> x, y, z;
    std::vector<MatchingEdge> edges;
    std::vector<Chain> rest;
    VertexSet seen(g.order());
    for (std::size_t i : m1) {
      const int w = chains[i].seq[2];
      if (seen.contains(w)) continue;
      seen.insert(w);
      const auto [p, q] = m[i];
      const bool q_near = g.adjacent(w, q);
      x.push_back(q_near ? p : q);
      y.push_back(q_near ? q : p);
      z.push_back(w);
      edges.push_back(m[i]);
      rest.push_back(chains[i]);
    }
    const int k = static_cast<int>(z.size());

    EdgeColoring col(k, 10);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        int c;
        if (mixed_on_edge(g, z[i], edges[j])) c = color_index(2, 2, 2);
        else if (mixed_on_edge(g, z[j], edges[i])) c = color_index(3, 3, 3);
        else c = color_index(g.adjacent(z[i], z[j]), g.adjacent(z[i], y[j]),
                             g.adjacent(y[i], z[j]));
        col.set(i, j, c);
      }
    }
    const Magnitude h_prev = matching_bound(n, Magnitude(static_cast<unsigned long>(n_prime)),
                                            std::max(t - 1, 2));
    std::vector<std::size_t> targets(10, static_cast<std::size_t>(n));
    targets[color_index(1, 1, 0)] = targets[color_index(1, 0, 1)] =
        static_cast<std::size_t>(n_prime);
    targets[kRecurseColor] = h_prev.saturated_size();

    int color = -1;
    std::vector<int> idx;
    std::string tag;
    if (t > 2) {
      if (auto mono = ramsey_monochromatic(col, targets)) {
        color = mono->color;
        idx = std::move(mono->vertices);
      } else {
        idx = max_monochromatic(col, kRecurseColor);
        if (static_cast<int>(idx.size()) >= n) {
          color = kRecurseColor;
          tag = ":partial";
        }
      }
    }
    if (color < 0) {
      const Magnitude needed = matching_bound(
          n, Magnitude(static_cast<unsigned long>(n_prime)), std::max(t, 2));
      return InsufficientSize{level, needed.to_string(), static_cast<std::int64_t>(m.size()),
                              {}};
    }

    const auto [a, b, c] = kMatchingColors[color];
    const std::string prov = level + ":color(" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")" + tag;
    auto take = [&](const std::vector<int>& from, int cnt, bool reverse) {
      std::vector<int> out;
      for (int p = 0; p < cnt; ++p) out.push_back(from[idx[reverse ? cnt - 1 - p : p]]);
      return out;
    };
    auto edge_list = [&]() {
      std::vector<MatchingEdge> out;
      for (int i : idx) out.push_back(edges[i]);
      return out;
    };
    switch (color) {
      case 0:
        return star(g, z[idx.front()], edge_list(), n, prov);
      case 1:
        return star(g, z[idx.back()], edge_list(), n, prov);
      case 2:
        return ab_witness(g, {FamilyKind::kThinSpider, n, false}, take(y, n, false),
                          take(z, n, false), prov);
      case 3:
        return ab_witness(g, {FamilyKind::kThickSpider, n, false}, take(x, n, false),
                          take(z, n, false), prov);
      case 4:
      case 5:
        return ab_witness(g, {FamilyKind::kHalfSplit, n_prime, false},
                          take(y, n_prime, color == 5), take(z, n_prime, color == 5), prov);
      case 6:
      case 7:
        return ab_witness(g, {FamilyKind::kHalfGraph, n, false}, take(y, n, color == 7),
                          take(z, n, color == 7), prov);
      case 8:
        return ab_witness(g, {FamilyKind::kLineK2n, n, true}, take(x, n, false),
                          take(z, n, false), prov);
      default:
        break;
    }

    std::vector<MatchingEdge> next;
    std::vector<Chain> next_chains;
    for (int i : idx) {
      Chain cc;
      cc.seq = {y[i], z[i]};
      cc.seq.insert(cc.seq.end(), rest[i].seq.begin() + 3, rest[i].seq.end());
      cc.source_set = VertexSet(g.order(), {y[i], z[i]});
      if (!validate_chain(g, cc))
        throw std::logic_error("shortened chain " + set_text(cc.seq) +
                               " is not a chain from {" + std::to_string(y[i]) + "," +
                               std::to_string(z[i]) + "}");
      next.emplace_back(y[i], z[i]);
      next_chains.push_back(std::move(cc));
    }
    auto res = run(next, next_chains, t - 1);
    if (auto* w = std::get_if<Witness>(&res)) w->provenance = prov + "/" + w->provenance;
    return res;
  }
};

void check_induced_matching(const Graph& g, const std::vector<MatchingEdge>& m, int v) {
  VertexSet covered(g.order());
  for (const auto& [p, q] : m) {
    if (p < 0 || q < 0 || p >= g.order() || q >= g.order() || !g.adjacent(p, q))
      throw std::invalid_argument("matching edge is not an edge of the graph");
    if (covered.contains(p) || covered.contains(q))
      throw std::invalid_argument("matching edges share a vertex");
    covered.insert(p);
    covered.insert(q);
  }
  for (const auto& [p, q] : m)
    if ((g.neighbors(p) & covered).size() != 1 || (g.neighbors(q) & covered).size() != 1)
      throw std::invalid_argument("matching is not induced");
  if (v < 0 || v >= g.order() || covered.contains(v))
    throw std::invalid_argument("matching target vertex is covered or out of range");
}

// ---------------------------------------------------------------- driver

ChainWitness chain_prefix_witness(const Graph& g, const Chain& c, int n, std::string prov) {
  Chain prefix;
  prefix.seq.assign(c.seq.begin(), c.seq.begin() + n + 2);
  ChainWitness w{trim_chain_to_length(g, std::move(prefix), n), 1, std::move(prov)};
  if (!validate_witness(g, w))
    throw std::logic_error("trimmed chain " + set_text(w.chain.seq) + " is not prime");
  return w;
}

bool is_outcome(FamilyKind k) {
  const auto& fam = outcome_families();
  return k == FamilyKind::kThickSpider || std::find(fam.begin(), fam.end(), k) != fam.end();
}

struct Orientation {
  const Graph& h;
  bool complemented;
  std::string name;
};

class Driver {
 public:
  Driver(const Graph& g, int n, const DriverOptions& opts) : g_(g), n_(n), opts_(opts) {}

  DriverResult run() {
    if (!is_prime(g_)) {
      auto hs = find_homogeneous_set(g_);
      return NonPrime{hs ? *hs : g_.empty_set()};
    }
    if (opts_.fast_path) {
      if (auto w = find_witness_any(g_, n_)) return finish(std::move(*w), false);
      trace_.push_back("family-search: nothing at size " + std::to_string(n_));
    } else if (auto c = find_prime_chain(g_, n_)) {
      return finish(std::move(*c), false);
    } else {
      trace_.push_back("chain-search: no prime chain of length " + std::to_string(n_));
    }

    const Graph co = complement(g_);
    auto alpha = maximum_independent_set(g_, opts_.clique_budget);
    auto omega = maximum_clique(g_, opts_.clique_budget);
    const Orientation orients[] = {{g_, false, "graph"}, {co, true, "complement"}};
    const CliqueResult sets[] = {std::move(alpha), std::move(omega)};
    const int first = sets[1].vertices.size() > sets[0].vertices.size() ? 1 : 0;

    std::optional<InsufficientSize> first_failure;
    for (int k : {first, 1 - first}) {
      const Orientation& o = orients[k];
      auto r = orient(o, sets[k]);
      if (auto* w = std::get_if<Witness>(&r)) return finish(std::move(*w), o.complemented);
      if (auto* c = std::get_if<ChainWitness>(&r)) return finish(std::move(*c), false);
      auto& fail = std::get<InsufficientSize>(r);
      trace_.push_back(o.name + ": " + fail.stage + " needs " + fail.needed + ", had " +
                       std::to_string(fail.had));
      if (!first_failure) first_failure = std::move(fail);
    }
    const BoundSpec spec = bounds(n_);
    trace_.push_back("size bound: " + spec.order.to_string() + " vertices suffice");
    InsufficientSize out = std::move(*first_failure);
    out.trace = trace_;
    return out;
  }

 private:
  DriverResult finish(AnyWitness w, bool flip) {
    if (auto* x = std::get_if<Witness>(&w)) {
      if (flip) x->family.complemented = !x->family.complemented;
      if (!validate_witness(g_, *x))
        throw std::logic_error("driver witness failed re-validation: " +
                               format_family_spec(x->family) + " " + set_text(x->embedding));
      return std::move(*x);
    }
    auto& c = std::get<ChainWitness>(w);
    if (!validate_witness(g_, c))
      throw std::logic_error("driver chain failed re-validation: " + set_text(c.chain.seq));
    return std::move(c);
  }

  HalfSplitResult orient(const Orientation& o, const CliqueResult& set) {
    const Graph& h = o.h;
    const VertexSet s(h.order(), std::span<const int>(set.vertices));
    trace_.push_back(o.name + ": independent set of size " + std::to_string(s.size()) +
                     (set.optimal ? "" : " (search budget exhausted)"));
    const int gn = static_cast<int>(half_split_bound(n_).saturated_size());

    if (s.size() >= gn || !set.optimal) {
      if (auto emb = find_induced_copy(h, {FamilyKind::kHalfSplit, gn, false})) {
        trace_.push_back(o.name + ": half-split of height " + std::to_string(gn));
        return extract_from_half_split(h, *emb, n_);
      }
    }

    auto r = extract_from_independent_set(h, s, n_, n_, n_ + 2);
    auto* w = std::get_if<Witness>(&r);
    if (!w) return std::get<InsufficientSize>(std::move(r));
    trace_.push_back(o.name + ": " + w->provenance + " -> " + format_family_spec(w->family));
    if (is_outcome(w->family.kind)) return std::move(*w);
    if (w->family.kind == FamilyKind::kHalfSplit)
      return extract_from_half_split(h, w->embedding, n_);
    return from_matching(o, *w, gn);
  }

  HalfSplitResult from_matching(const Orientation& o, const Witness& w, int gn) {
    const Graph& h = o.h;
    const int k = w.family.n;
    std::vector<MatchingEdge> m;
    VertexSet covered(h.order());
    for (int i = 0; i < k; ++i) {
      m.emplace_back(w.embedding[i], w.embedding[k + i]);
      covered.insert(w.embedding[i]);
      covered.insert(w.embedding[k + i]);
    }
    const int v = covered.complemented().first();
    if (v < 0) return InsufficientSize{"matching", "1", 0, {}};
    std::vector<Chain> chains;
    for (const auto& [p, q] : m) {
      auto c = find_chain(h, VertexSet(h.order(), {p, q}), v);
      if (!c) throw std::logic_error("prime graph without a chain from a matching edge");
      if (c->length() >= n_ + 1) return chain_prefix_witness(h, *c, n_, "matching-chain");
      chains.push_back(std::move(*c));
    }
    trace_.push_back(o.name + ": induced matching of " + std::to_string(k) +
                     " edges, target " + std::to_string(v));
    auto r = extract_from_matching(h, m, v, n_, gn, n_, std::move(chains));
    if (auto* x = std::get_if<Witness>(&r)) return std::move(*x);
    return std::get<InsufficientSize>(std::move(r));
  }

  const Graph& g_;
  int n_;
  DriverOptions opts_;
  std::vector<std::string> trace_;
};

}  // namespace

bool validate_regular_triple(const Graph& g, const RegularTriple& t) {
  const int n = g.order();
  if (t.a.universe() != n || t.x.size() != t.y.size() || t.x.size() != t.cases.size())
    return false;
  VertexSet used = t.a;
  for (const auto* list : {&t.x, &t.y}) {
    for (int v : *list) {
      if (v < 0 || v >= n || used.contains(v)) return false;
      used.insert(v);
    }
  }
  VertexSet ax = t.a;
  for (int v : t.x) ax.insert(v);
  if (!g.is_independent(ax)) return false;
  VertexSet later = t.a;
  for (std::size_t i = t.x.size(); i-- > 0;) {
    const bool adj = g.adjacent(t.y[i], t.x[i]);
    if (t.cases[i] == TripleCase::kAdjacentThenAnticomplete) {
      if (!adj || g.neighbors(t.y[i]).intersects(later)) return false;
    } else {
      if (adj || !later.is_subset_of(g.neighbors(t.y[i]))) return false;
    }
    later.insert(t.x[i]);
  }
  return true;
}

RegularTriple grow_regular_triple(const Graph& g, const RegularTriple& t) {
  if (t.a.universe() != g.order() || t.a.size() <= 1 || t.a.size() >= g.order())
    throw std::invalid_argument("grow_regular_triple: need 1 < |A| < |V(G)|");
  if (!validate_regular_triple(g, t))
    throw std::invalid_argument("grow_regular_triple: not a regular triple");
  auto out = try_grow(g, t);
  if (!out) throw std::logic_error("grow_regular_triple: A is homogeneous, graph is not prime");
  return std::move(*out);
}

StageResult extract_from_independent_set(const Graph& g, const VertexSet& s, int n, int n1,
                                         int n2) {
  if (n < 1 || n1 < 1 || n2 < 1)
    throw std::invalid_argument("extract_from_independent_set: sizes must be positive");
  if (s.universe() != g.order() || !g.is_independent(s))
    throw std::invalid_argument("extract_from_independent_set: S is not independent");

  const auto u = [](int k) { return Magnitude(static_cast<unsigned long>(k)); };
  const Magnitude sizes[] = {u(n1 + n), u(2 * n - 1), u(n + n2), u(n + n2 - 1)};
  const Magnitude bound = ramsey_upper_bound(sizes);
  const std::size_t wanted = bound.saturated_size();

  RegularTriple t{s, {}, {}, {}};
  while (t.x.size() < wanted && t.a.size() > 1 && t.a.size() < g.order()) {
    auto next = try_grow(g, t);
    if (!next) break;
    t = std::move(*next);
  }
  const int m = static_cast<int>(t.x.size());

  // Colour (a,b) of pair i < j; palette order (1,0), (0,1), (1,1), (0,0).
  constexpr std::array<std::array<int, 2>, 4> kColors = {{{1, 0}, {0, 1}, {1, 1}, {0, 0}}};
  EdgeColoring col(m, 4);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int a = g.adjacent(t.x[i], t.y[j]);
      const int b = g.adjacent(t.y[i], t.y[j]);
      for (int c = 0; c < 4; ++c)
        if (kColors[c] == std::array<int, 2>{a, b}) col.set(i, j, c);
    }
  const std::vector<std::size_t> targets = {
      static_cast<std::size_t>(2 * n - 1), static_cast<std::size_t>(n + n2),
      static_cast<std::size_t>(n + n2 - 1), static_cast<std::size_t>(n1 + n)};

  if (auto mono = ramsey_monochromatic(col, targets)) {
    const auto [a, b] = kColors[mono->color];
    if (auto w = triple_case(g, t, a, b, mono->vertices, n, n1, n2, ""))
      return std::move(*w);
    throw std::logic_error("monochromatic set of target size without an outcome");
  }
  // Below the Ramsey bound: any monochromatic set whose split is large enough
  // still yields an outcome.
  for (int c = 0; c < 4; ++c) {
    const auto [a, b] = kColors[c];
    if (auto w = triple_case(g, t, a, b, max_monochromatic(col, c), n, n1, n2, ":partial"))
      return std::move(*w);
  }
  return InsufficientSize{"regular-triple", bound.to_string(), m, {}};
}

StageResult extract_from_matching(const Graph& g, const std::vector<MatchingEdge>& m, int v,
                                  int n, int n_prime, int t,
                                  std::optional<std::vector<Chain>> chains) {
  if (n < 1 || n_prime < 1 || t < 2)
    throw std::invalid_argument("extract_from_matching: need n, n' >= 1 and t >= 2");
  check_induced_matching(g, m, v);
  std::vector<Chain> cs;
  if (chains) {
    if (chains->size() != m.size())
      throw std::invalid_argument("extract_from_matching: one chain per edge required");
    cs = std::move(*chains);
  } else {
    for (const auto& [p, q] : m) {
      auto c = find_chain(g, VertexSet(g.order(), {p, q}), v);
      if (!c)
        throw std::invalid_argument("no chain from {" + std::to_string(p) + "," +
                                    std::to_string(q) + "} to " + std::to_string(v));
      cs.push_back(std::move(*c));
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    Chain& c = cs[i];
    const auto [p, q] = m[i];
    if (c.seq.size() < 3 || c.target() != v ||
        !((c.seq[0] == p && c.seq[1] == q) || (c.seq[0] == q && c.seq[1] == p)))
      throw std::invalid_argument("chain does not run from its edge to the target");
    c.source_set = VertexSet(g.order(), {p, q});
    if (!validate_chain(g, c)) throw std::invalid_argument("supplied sequence is not a chain");
    if (c.length() > t) throw std::invalid_argument("chain longer than t");
  }
  return MatchingRun{g, v, n, n_prime}.run(m, cs, t);
}

HalfSplitResult extract_from_half_split(const Graph& g, const EmbeddingMap& emb, int n) {
  if (n < 3) throw std::invalid_argument("extract_from_half_split: n must be >= 3");
  if (emb.size() % 2 != 0 || emb.size() < 4)
    throw std::invalid_argument("extract_from_half_split: embedding must list a_i then b_i");
  const int big_n = static_cast<int>(emb.size() / 2);
  if (!is_induced_embedding(generate({FamilyKind::kHalfSplit, big_n, false}).graph, g, emb))
    throw std::invalid_argument("extract_from_half_split: not an induced half-split graph");
  auto a = [&](int i) { return emb[i - 1]; };
  auto b = [&](int i) { return emb[big_n + i - 1]; };
  const std::string needed = half_split_bound(n).to_string();

  const ChainSearch search(g, VertexSet(g.order(), {a(big_n), b(big_n)}));
  const int la = search.chain_length(a(1));
  const int lb = search.chain_length(b(1));
  if (la < 0 && lb < 0)
    throw std::logic_error("no chain from {a_N,b_N} to a_1 or b_1: graph is not prime");
  const int target = (la >= 0 && (lb < 0 || la <= lb)) ? a(1) : b(1);
  Chain chain = *search.chain_to(target);
  if (chain.seq[0] != a(big_n)) std::swap(chain.seq[0], chain.seq[1]);
  chain.source_set.reset();
  const auto& u = chain.seq;
  const int t = chain.length();

  if (t >= n + 1) return chain_prefix_witness(g, chain, n, "half-split:chain");

  VertexSet interior(g.order());
  for (int k = 2; k < t; ++k) interior.insert(u[k]);
  // Middle indices grouped by how the interior vertices see a_j and b_j.
  std::map<std::vector<bool>, std::vector<int>> groups;
  std::vector<int> chosen;
  for (int j = 2; j < big_n && chosen.empty(); ++j) {
    if (interior.contains(a(j)) || interior.contains(b(j))) continue;
    std::vector<bool> key;
    for (int k = 2; k < t; ++k) {
      key.push_back(g.adjacent(u[k], a(j)));
      key.push_back(g.adjacent(u[k], b(j)));
    }
    auto& grp = groups[key];
    grp.push_back(j);
    if (static_cast<int>(grp.size()) == n) chosen = grp;
  }
  if (chosen.empty()) return InsufficientSize{"half-split", needed, big_n, {}};

  VertexSet set_a(g.order()), set_b(g.order());
  std::vector<int> av, bv;
  for (int j : chosen) {
    set_a.insert(a(j));
    set_b.insert(b(j));
    av.push_back(a(j));
    bv.push_back(b(j));
  }
  int i = 0;
  while (i <= t && !is_complete_to(g, u[i], set_a) && !is_anticomplete_to(g, u[i], set_b)) ++i;
  if (i > t || i < 2) throw std::logic_error("half-split: no switching vertex on the chain");

  const int ui = u[i];
  std::vector<int> base(av);
  base.insert(base.end(), bv.begin(), bv.end());
  const std::string prov = "half-split:u" + std::to_string(i);
  const bool comp_a = is_complete_to(g, ui, set_a);
  const bool comp_b = is_complete_to(g, ui, set_b);
  const bool anti_a = is_anticomplete_to(g, ui, set_a);
  const bool anti_b = is_anticomplete_to(g, ui, set_b);
  if (comp_a && anti_b) {
    base.push_back(ui);
    return checked(g, {FamilyKind::kHalfSplitApex, n, false}, std::move(base), prov);
  }
  if (comp_a && comp_b) {
    const int p = !g.adjacent(u[i - 1], ui) ? u[i - 1] : u[i - 2];
    if (g.adjacent(p, ui)) throw std::logic_error("half-split: no non-neighbour before u_i");
    std::vector<int> vs;
    for (int x : base)
      if (x != bv.front()) vs.push_back(x);
    vs.push_back(p);
    vs.push_back(ui);
    return witness_on(g, {FamilyKind::kHalfSplitPendant, n, true}, vs, prov);
  }
  if (anti_a && anti_b) {
    const int q = g.adjacent(u[i - 1], ui) ? u[i - 1] : u[i - 2];
    if (!g.adjacent(q, ui)) throw std::logic_error("half-split: no neighbour before u_i");
    std::vector<int> vs;
    for (int x : base)
      if (x != av.back()) vs.push_back(x);
    vs.push_back(q);
    vs.push_back(ui);
    return witness_on(g, {FamilyKind::kHalfSplitPendant, n, false}, vs, prov);
  }
  throw std::logic_error("half-split: u_i is mixed on A or B");
}

DriverResult unavoidable_witness(const Graph& g, int n, const DriverOptions& opts) {
  if (n < 3) throw std::invalid_argument("unavoidable_witness: n must be >= 3");
  return Driver(g, n, opts).run();
}

}  // namespace primewit
