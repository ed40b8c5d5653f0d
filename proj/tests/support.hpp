#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "primewit/chains.hpp"
#include "primewit/graph.hpp"
#include "primewit/homogeneous.hpp"

namespace primewit::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

// Labeled graph number `code` on n vertices: bit k is the k-th pair (i<j) in
// lexicographic order.
inline Graph graph_from_code(int n, std::uint64_t code) {
  GraphBuilder b(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((code >> k) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Homogeneous-set test straight from the definition, on a bitmask.
inline bool naive_homogeneous(const Graph& g, std::uint32_t mask) {
  const int n = g.order();
  const int size = __builtin_popcount(mask);
  if (size < 2 || size >= n) return false;
  for (int w = 0; w < n; ++w) {
    if ((mask >> w) & 1U) continue;
    int adj = 0;
    for (int u = 0; u < n; ++u)
      if (((mask >> u) & 1U) && g.adjacent(w, u)) ++adj;
    if (adj != 0 && adj != size) return false;
  }
  return true;
}

inline bool naive_prime(const Graph& g) {
  if (g.order() <= 2) return false;
  for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask)
    if (naive_homogeneous(g, mask)) return false;
  return true;
}

// Every injective map pattern -> host, checked pair by pair.
inline bool naive_embeds(const Graph& pattern, const Graph& host) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> map(k, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = pattern.adjacent(i, j) == host.adjacent(h, map[j]);
      if (!ok) continue;
      used[h] = true;
      map[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool naive_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g.order() && ok; ++i)
      for (int j = i + 1; j < g.order() && ok; ++j)
        ok = g.adjacent(i, j) == h.adjacent(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Random prime graph by rejection sampling.
inline Graph random_prime_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (is_prime(g)) return g;
  }
}

// Induced subgraph on the listed vertices, by hand.
inline Graph restrict_to(const Graph& g, const std::vector<int>& vs) {
  GraphBuilder b(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return std::move(b).build();
}

// Host on y_0..y_{N-1} (0..N-1) then x_0..x_{N-1} (N..2N-1), x independent.
// For i < j: x_i ~ y_j iff `a`, y_i ~ y_j iff `b`; y_i sees x_i and no later x
// in the first case, all later x and not x_i in the second. Growing from the
// x's reproduces exactly this triple.
inline Graph triple_host(int n, bool first_case, bool a, bool b) {
  GraphBuilder g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.set_edge(i, n + i, first_case);
    for (int j = i + 1; j < n; ++j) {
      g.set_edge(n + i, j, a);
      g.set_edge(i, j, b);
      g.set_edge(i, n + j, !first_case);
    }
  }
  return std::move(g).build();
}

// Matching host at t = 3: for each i, edges x_i y_i, y_i z_i, z_i v, chain
// (x_i, y_i, z_i, v). For i < j the colour (zz, zy, yz) sets z_i ~ z_j,
// z_i ~ {x_j, y_j} and {x_i, y_i} ~ z_j. Colour 2 instead makes z_i see only
// y_j, colour 3 makes z_j see only y_i.
struct MatchingHost {
  Graph g;
  std::vector<std::pair<int, int>> m;
  std::vector<Chain> chains;
  int v;
};

inline MatchingHost matching_host(int k, int zz, int zy, int yz) {
  const int v = 3 * k;
  GraphBuilder b(v + 1);
  auto x = [](int i) { return 3 * i; };
  auto y = [](int i) { return 3 * i + 1; };
  auto z = [](int i) { return 3 * i + 2; };
  MatchingHost h;
  for (int i = 0; i < k; ++i) {
    b.add_edge(x(i), y(i));
    b.add_edge(y(i), z(i));
    b.add_edge(z(i), v);
    for (int j = i + 1; j < k; ++j) {
      if (zz == 2) {
        b.add_edge(z(i), y(j));
      } else if (zz == 3) {
        b.add_edge(z(j), y(i));
      } else {
        b.set_edge(z(i), z(j), zz == 1);
        b.set_edge(z(i), x(j), zy == 1);
        b.set_edge(z(i), y(j), zy == 1);
        b.set_edge(x(i), z(j), yz == 1);
        b.set_edge(y(i), z(j), yz == 1);
      }
    }
    h.m.push_back({x(i), y(i)});
    h.chains.push_back(Chain{{x(i), y(i), z(i), v}, VertexSet(v + 1, {x(i), y(i)})});
  }
  h.g = std::move(b).build();
  h.v = v;
  return h;
}

// Predecessor rule, written out directly.
inline bool naive_chain(const Graph& g, const std::vector<int>& seq) {
  for (std::size_t i = 2; i < seq.size(); ++i) {
    int adj = 0;
    for (std::size_t j = 0; j < i; ++j) adj += g.adjacent(seq[i], seq[j]);
    const bool last = g.adjacent(seq[i], seq[i - 1]);
    const int k = static_cast<int>(i);
    if (!((last && adj == 1) || (!last && adj == k - 1))) return false;
  }
  return true;
}

// Graph on 0..t whose identity order is a chain: v_1 ~ v_0 when `first` and
// each later v_i either sees only v_{i-1} or everything but v_{i-1}.
inline Graph chain_graph(int t, std::mt19937_64& rng) {
  GraphBuilder b(t + 1);
  if (rng() & 1U) b.add_edge(0, 1);
  for (int i = 2; i <= t; ++i) {
    const bool unique_neighbor = rng() & 1U;
    for (int j = 0; j < i; ++j) b.set_edge(i, j, (j == i - 1) == unique_neighbor);
  }
  return std::move(b).build();
}

}  // namespace primewit::testing
