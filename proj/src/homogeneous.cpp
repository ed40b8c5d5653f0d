#include "primewit/homogeneous.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primewit {

bool is_homogeneous_set(const Graph& g, const VertexSet& x) {
  const int k = x.size();
  if (k < 2 || k >= g.order()) return false;
  for (int w = 0; w < g.order(); ++w)
    if (!x.contains(w) && is_mixed(g, w, x)) return false;
  return true;
}

VertexSet homogeneous_closure(const Graph& g, const VertexSet& seed) {
  const int anchor = seed.first();
  if (anchor < 0 || seed.size() < 2)
    throw std::invalid_argument("closure seed needs at least two vertices");
  // An outside vertex w is uniform on the current set exactly when it agrees
  // with its adjacency to `anchor`; adding x can only make w mixed when
  // adj(w, x) != adj(w, anchor).
  VertexSet closure(g.order());
  closure.insert(anchor);
  std::vector<int> queue;
  seed.for_each([&](int v) {
    if (v != anchor) queue.push_back(v);
  });
  for (int v : queue) closure.insert(v);
  const VertexSet& anchor_nb = g.neighbors(anchor);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexSet fresh = (g.neighbors(queue[head]) ^ anchor_nb) - closure;
    fresh.for_each([&](int w) {
      closure.insert(w);
      queue.push_back(w);
    });
  }
  return closure;
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
  const int n = g.order();
  if (n <= 2) return std::nullopt;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      VertexSet c = homogeneous_closure(g, VertexSet(n, {u, v}));
      if (c.size() < n) return c;
    }
  }
  return std::nullopt;
}

bool is_prime(const Graph& g, SmallGraphConvention small) {
  if (g.order() <= 2) return small == SmallGraphConvention::kVacuouslyPrime;
  return !find_homogeneous_set(g).has_value();
}

std::vector<VertexSet> brute_force_homogeneous(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder)
    throw std::invalid_argument("brute_force_homogeneous: " + std::to_string(n) +
                                " vertices exceeds limit of " +
                                std::to_string(kBruteForceMaxOrder));
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    g.neighbors(u).for_each([&](int v) { adj[u] |= std::uint32_t{1} << v; });

  std::vector<VertexSet> out;
  const std::uint32_t full = n == 32 ? ~0U : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t x = 1; x < full; ++x) {
    if (std::popcount(x) < 2) continue;
    bool ok = true;
    for (int w = 0; w < n && ok; ++w) {
      if ((x >> w) & 1U) continue;
      const std::uint32_t hit = adj[w] & x;
      ok = hit == 0 || hit == x;
    }
    if (!ok) continue;
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if ((x >> v) & 1U) s.insert(v);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace primewit
