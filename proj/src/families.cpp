#include "primewit/families.hpp"

#include <stdexcept>
#include <string>

#include "primewit/chains.hpp"

namespace primewit {
namespace {

std::vector<std::string> ab_roles(int n) {
  std::vector<std::string> roles;
  for (int i = 1; i <= n; ++i) roles.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) roles.push_back("b" + std::to_string(i));
  return roles;
}

// a_i = i-1, b_j = n+j-1 (1-based family indices).
struct Builder {
  int n;
  GraphBuilder g;
  int a(int i) const { return i - 1; }
  int b(int j) const { return n + j - 1; }
  void clique_b() {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) g.add_edge(b(i), b(j));
  }
  void clique_a() {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) g.add_edge(a(i), a(j));
  }
};

}  // namespace

LabeledFamilyGraph generate(const FamilyId& id) {
  const int n = id.n;
  if (n < 1 || n > kMaxFamilySize)
    throw std::out_of_range("family size out of range: " + std::to_string(n));

  LabeledFamilyGraph out{id, Graph(), {}};
  if (id.kind == FamilyKind::kPrimeChain) {
    out.graph = Graph::path(n + 1);
    for (int i = 0; i <= n; ++i) out.roles.push_back("v" + std::to_string(i));
  } else {
    const bool extra = id.kind == FamilyKind::kSubdividedStar ||
                       id.kind == FamilyKind::kHalfSplitApex ||
                       id.kind == FamilyKind::kHalfSplitPendant;
    Builder f{n, GraphBuilder(2 * n + (extra ? 1 : 0))};
    const int x = 2 * n;
    out.roles = ab_roles(n);
    switch (id.kind) {
      case FamilyKind::kSubdividedStar:
        for (int i = 1; i <= n; ++i) {
          f.g.add_edge(x, f.a(i));
          f.g.add_edge(f.a(i), f.b(i));
        }
        out.roles.push_back("center");
        break;
      case FamilyKind::kLineK2n:
        f.clique_a();
        f.clique_b();
        for (int i = 1; i <= n; ++i) f.g.add_edge(f.a(i), f.b(i));
        break;
      case FamilyKind::kThinSpider:
        f.clique_b();
        for (int i = 1; i <= n; ++i) f.g.add_edge(f.a(i), f.b(i));
        break;
      case FamilyKind::kThickSpider:
        f.clique_b();
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            if (i != j) f.g.add_edge(f.a(i), f.b(j));
        break;
      case FamilyKind::kMatching:
        for (int i = 1; i <= n; ++i) f.g.add_edge(f.a(i), f.b(i));
        break;
      case FamilyKind::kHalfGraph:
      case FamilyKind::kHalfSplit:
      case FamilyKind::kHalfSplitApex:
      case FamilyKind::kHalfSplitPendant:
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= i; ++j) f.g.add_edge(f.a(i), f.b(j));
        if (id.kind != FamilyKind::kHalfGraph) f.clique_b();
        if (id.kind == FamilyKind::kHalfSplitApex) {
          for (int i = 1; i <= n; ++i) f.g.add_edge(x, f.a(i));
          out.roles.push_back("apex");
        }
        if (id.kind == FamilyKind::kHalfSplitPendant) {
          f.g.add_edge(x, f.a(n));
          out.roles.push_back("pendant");
        }
        break;
      case FamilyKind::kPrimeChain:
        break;
    }
    out.graph = std::move(f.g).build();
  }
  if (id.complemented) out.graph = complement(out.graph);
  return out;
}

std::optional<EmbeddingMap> find_induced_copy(const Graph& host, const FamilyId& id) {
  const auto pattern = generate(id);
  if (pattern.graph.order() > host.order()) return std::nullopt;
  return find_induced_embedding(pattern.graph, host);
}

const std::vector<FamilyKind>& outcome_families() {
  static const std::vector<FamilyKind> kOrder = {
      FamilyKind::kSubdividedStar, FamilyKind::kLineK2n,
      FamilyKind::kThinSpider,     FamilyKind::kHalfGraph,
      FamilyKind::kHalfSplitApex,  FamilyKind::kHalfSplitPendant,
  };
  return kOrder;
}

std::optional<ChainWitness> find_prime_chain(const Graph& host, int length) {
  if (length < 3) throw std::invalid_argument("prime chain length must be >= 3");
  const int n = host.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const ChainSearch search(host, VertexSet(n, {u, v}));
      const int far = search.farthest();
      if (far < 0 || search.chain_length(far) < length) continue;
      if (search.chain_length(far) > length) {
        Chain c = *search.chain_to(far);
        const int original = c.length();
        c.source_set.reset();
        c = trim_chain_to_length(host, std::move(c), length);
        return ChainWitness{std::move(c), original - length, "chain-search"};
      }
      for (int w = 0; w < n; ++w) {
        if (search.chain_length(w) != length) continue;
        Chain c = *search.chain_to(w);
        c.source_set.reset();
        if (chain_induces_prime(host, c))
          return ChainWitness{std::move(c), 0, "chain-search"};
      }
    }
  }
  return std::nullopt;
}

std::optional<AnyWitness> find_witness_any(const Graph& host, int n) {
  if (n < 3) throw std::invalid_argument("find_witness_any: n must be >= 3");
  for (FamilyKind kind : outcome_families()) {
    for (bool complemented : {false, true}) {
      const FamilyId id{kind, n, complemented};
      if (auto emb = find_induced_copy(host, id))
        return Witness{id, std::move(*emb), "family-search"};
    }
  }
  if (auto c = find_prime_chain(host, n)) return AnyWitness{std::move(*c)};
  return std::nullopt;
}

}  // namespace primewit
