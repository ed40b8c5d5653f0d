#include <gtest/gtest.h>

#include <random>

#include "primewit/families.hpp"
#include "primewit/homogeneous.hpp"
#include "support.hpp"

namespace primewit {
namespace {

using testing::graph_from_code;
using testing::naive_homogeneous;
using testing::naive_prime;

std::vector<std::uint32_t> masks_of(const std::vector<VertexSet>& sets) {
  std::vector<std::uint32_t> out;
  for (const auto& s : sets) {
    std::uint32_t m = 0;
    s.for_each([&](int v) { m |= 1U << v; });
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> naive_all(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
    if (naive_homogeneous(g, m)) out.push_back(m);
  return out;
}

TEST(HomogeneousTest, FourCycleHasOppositePairs) {
  const Graph c4 = Graph::cycle(4);
  const auto found = find_homogeneous_set(c4);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_homogeneous_set(c4, *found));
  EXPECT_EQ(masks_of(brute_force_homogeneous(c4)), naive_all(c4));
  EXPECT_EQ(naive_all(c4), (std::vector<std::uint32_t>{0b0101, 0b1010}));
}

TEST(HomogeneousTest, PathOnFourIsPrime) {
  EXPECT_FALSE(find_homogeneous_set(Graph::path(4)));
  EXPECT_TRUE(brute_force_homogeneous(Graph::path(4)).empty());
  EXPECT_TRUE(is_prime(Graph::path(4)));
}

TEST(HomogeneousTest, EdgelessGraphEverySmallSubset) {
  EXPECT_EQ(brute_force_homogeneous(Graph(4)).size(), 10U);
}

TEST(HomogeneousTest, HalfSplitHasTopPair) {
  const Graph g = generate({FamilyKind::kHalfSplit, 5, false}).graph;
  const auto found = find_homogeneous_set(g);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_homogeneous_set(g, *found));
  // a_5 and b_5 see every other vertex alike.
  EXPECT_TRUE(naive_homogeneous(g, (1U << 4) | (1U << 9)));
}

TEST(HomogeneousTest, SmallGraphConvention) {
  for (int n = 0; n <= 2; ++n) {
    EXPECT_FALSE(is_prime(Graph(n)));
    EXPECT_TRUE(is_prime(Graph(n), SmallGraphConvention::kVacuouslyPrime));
    EXPECT_FALSE(find_homogeneous_set(Graph::complete(n)));
  }
  EXPECT_FALSE(is_prime(Graph::complete(3)));
  EXPECT_TRUE(is_prime(generate({FamilyKind::kThinSpider, 4, false}).graph));
}

TEST(HomogeneousTest, AgreesWithNaiveOnAllSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (1ULL << testing::pair_count(n)); ++code) {
      const Graph g = graph_from_code(n, code);
      const auto found = find_homogeneous_set(g);
      const auto all = naive_all(g);
      ASSERT_EQ(found.has_value(), !all.empty()) << n << " " << code;
      if (found) EXPECT_TRUE(is_homogeneous_set(g, *found));
      EXPECT_EQ(masks_of(brute_force_homogeneous(g)), all);
    }
  }
}

TEST(HomogeneousTest, ComplementInvariance) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = testing::random_graph(3 + static_cast<int>(rng() % 9), 0.5, rng);
    EXPECT_EQ(is_prime(g), is_prime(complement(g)));
  }
}

TEST(HomogeneousTest, SubstitutionIsNotPrime) {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 100; ++rep) {
    const Graph outer = testing::random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng);
    const Graph inner = testing::random_graph(2 + static_cast<int>(rng() % 4), 0.5, rng);
    const int v = static_cast<int>(rng() % outer.order());
    // Vertex v of outer is replaced by a copy of inner; the copy keeps v's
    // neighbourhood.
    const int n = outer.order() - 1 + inner.order();
    std::vector<int> id(outer.order());
    int next = 0;
    for (int u = 0; u < outer.order(); ++u) id[u] = u == v ? -1 : next++;
    GraphBuilder b(n);
    for (const auto& [p, q] : outer.edges()) {
      if (p != v && q != v) b.add_edge(id[p], id[q]);
    }
    VertexSet copy(n);
    for (int i = 0; i < inner.order(); ++i) {
      copy.insert(next + i);
      for (int u = 0; u < outer.order(); ++u)
        if (u != v && outer.adjacent(u, v)) b.add_edge(next + i, id[u]);
    }
    for (const auto& [p, q] : inner.edges()) b.add_edge(next + p, next + q);
    const Graph g = std::move(b).build();
    EXPECT_FALSE(is_prime(g));
    if (n > inner.order()) EXPECT_TRUE(is_homogeneous_set(g, copy));
  }
}

TEST(HomogeneousTest, ClosureIsHomogeneousOrEverything) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = testing::random_graph(4 + static_cast<int>(rng() % 8), 0.5, rng);
    const int u = static_cast<int>(rng() % g.order());
    const int w = (u + 1) % g.order();
    const VertexSet c = homogeneous_closure(g, VertexSet(g.order(), {u, w}));
    EXPECT_TRUE(c == g.all_vertices() || is_homogeneous_set(g, c));
  }
}

TEST(HomogeneousTest, BruteForceGuard) {
  EXPECT_THROW(brute_force_homogeneous(Graph(kBruteForceMaxOrder + 1)), std::invalid_argument);
}

}  // namespace
}  // namespace primewit
