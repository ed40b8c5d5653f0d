#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "primewit/cliques.hpp"
#include "primewit/extraction.hpp"
#include "primewit/families.hpp"
#include "primewit/homogeneous.hpp"
#include "support.hpp"

namespace primewit {
namespace {

using K = FamilyKind;
using testing::matching_host;
using testing::triple_host;

Witness as_witness(const StageResult& r) {
  if (const auto* ins = std::get_if<InsufficientSize>(&r))
    ADD_FAILURE() << "insufficient at " << ins->stage << ": needed " << ins->needed << ", had "
                  << ins->had;
  return std::get<Witness>(r);
}

VertexSet upper_half(int n) {
  VertexSet s(2 * n);
  for (int i = n; i < 2 * n; ++i) s.insert(i);
  return s;
}

TEST(RegularTripleTest, GrowOnPath) {
  const Graph p4 = Graph::path(4);
  RegularTriple t{VertexSet(4, {0, 3}), {}, {}, {}};
  ASSERT_TRUE(validate_regular_triple(p4, t));
  const RegularTriple next = grow_regular_triple(p4, t);
  EXPECT_EQ(next.a, VertexSet(4, {0}));
  EXPECT_EQ(next.x, (std::vector<int>{3}));
  EXPECT_EQ(next.y, (std::vector<int>{1}));
  EXPECT_EQ(next.cases, (std::vector<TripleCase>{TripleCase::kNonadjacentThenComplete}));
  EXPECT_TRUE(validate_regular_triple(p4, next));
}

TEST(RegularTripleTest, ValidationCatchesViolations) {
  const Graph p4 = Graph::path(4);
  // y = 1 is adjacent to x = 0 but also to A = {2}.
  RegularTriple bad{VertexSet(4, {2}), {0}, {1}, {TripleCase::kAdjacentThenAnticomplete}};
  EXPECT_FALSE(validate_regular_triple(p4, bad));
  EXPECT_THROW(grow_regular_triple(p4, bad), std::invalid_argument);
  RegularTriple tiny{VertexSet(4, {0}), {}, {}, {}};
  EXPECT_THROW(grow_regular_triple(p4, tiny), std::invalid_argument);
}

TEST(RegularTripleTest, GrowthKeepsInvariants) {
  std::mt19937_64 rng(61);
  int grown = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = testing::random_prime_graph(14, rng, 0.3);
    const auto s = maximum_independent_set(g);
    if (s.vertices.size() < 4) continue;
    RegularTriple t{VertexSet(g.order(), std::span<const int>(s.vertices)), {}, {}, {}};
    const int k = static_cast<int>(std::floor(std::log2(static_cast<double>(t.a.size())))) - 1;
    int steps = 0;
    while (t.a.size() > 1) {
      const int before = t.a.size();
      t = grow_regular_triple(g, t);
      ++steps;
      ASSERT_TRUE(validate_regular_triple(g, t));
      EXPECT_GE(2 * t.a.size(), before);
      EXPECT_LT(t.a.size(), before);
    }
    EXPECT_GE(steps, k);
    ++grown;
  }
  EXPECT_GT(grown, 10);
}

struct TripleExpectation {
  bool first_case, a, b;
  FamilyId family;
};

TEST(IndependentSetTest, EachColorCase) {
  const int n = 3;
  const TripleExpectation cases[] = {
      {true, false, false, {K::kMatching, n, false}},
      {false, false, false, {K::kHalfGraph, n, false}},
      {true, true, false, {K::kHalfGraph, n, false}},
      {false, true, false, {K::kLineK2n, n, true}},
      {true, false, true, {K::kThinSpider, n, false}},
      {false, false, true, {K::kHalfSplit, n, false}},
      {true, true, true, {K::kHalfSplit, n, false}},
      {false, true, true, {K::kThickSpider, n, false}},
  };
  for (const auto& c : cases) {
    const Graph g = triple_host(8, c.first_case, c.a, c.b);
    const Witness w = as_witness(extract_from_independent_set(g, upper_half(8), n, n, n));
    EXPECT_EQ(w.family, c.family) << c.first_case << c.a << c.b;
    EXPECT_TRUE(validate_witness(g, w));
  }
}

TEST(IndependentSetTest, ShortTripleIsInsufficient) {
  const Graph g = triple_host(3, true, false, true);
  const auto r = extract_from_independent_set(g, upper_half(3), 3, 3, 3);
  const auto* ins = std::get_if<InsufficientSize>(&r);
  ASSERT_TRUE(ins);
  EXPECT_EQ(ins->stage, "regular-triple");
}

TEST(IndependentSetTest, RequiresIndependentSet) {
  EXPECT_THROW(extract_from_independent_set(Graph::path(4), VertexSet(4, {0, 1}), 2, 2, 2),
               std::invalid_argument);
}

TEST(IndependentSetTest, RandomHostsGiveValidOutcomes) {
  std::mt19937_64 rng(67);
  int witnesses = 0;
  int hosts = 0;
  for (int rep = 0; rep < 15; ++rep) {
    const Graph g = testing::random_prime_graph(40, rng, 0.08);
    const auto s = maximum_independent_set(g);
    if (s.vertices.size() < 16) continue;
    ++hosts;
    const VertexSet set(g.order(), std::span<const int>(s.vertices));
    const auto r = extract_from_independent_set(g, set, 2, 2, 2);
    if (const auto* w = std::get_if<Witness>(&r)) {
      EXPECT_TRUE(validate_witness(g, *w));
      ++witnesses;
    }
  }
  EXPECT_GT(hosts, 5);
  EXPECT_GT(witnesses, 0);
}

TEST(MatchingTest, CrossColorCases) {
  const int n = 3;
  struct Case {
    int zz, zy, yz;
    FamilyKind kind;
    bool complemented;
  };
  const Case cases[] = {
      {1, 0, 0, K::kThinSpider, false},  {1, 1, 1, K::kThickSpider, false},
      {1, 1, 0, K::kHalfSplit, false},   {1, 0, 1, K::kHalfSplit, false},
      {0, 1, 0, K::kHalfGraph, false},   {0, 0, 1, K::kHalfGraph, false},
      {0, 1, 1, K::kLineK2n, true},      {2, 2, 2, K::kSubdividedStar, false},
      {3, 3, 3, K::kSubdividedStar, false},
  };
  for (const auto& c : cases) {
    const auto h = matching_host(4, c.zz, c.zy, c.yz);
    const Witness w = as_witness(extract_from_matching(h.g, h.m, h.v, n, n, 3, h.chains));
    EXPECT_EQ(w.family.kind, c.kind) << c.zz << c.zy << c.yz;
    EXPECT_EQ(w.family.complemented, c.complemented) << c.zz << c.zy << c.yz;
    EXPECT_EQ(w.family.n, n);
    EXPECT_TRUE(validate_witness(h.g, w));
    EXPECT_NE(w.provenance.find("color"), std::string::npos) << w.provenance;
  }
}

TEST(MatchingTest, AnticompleteChainsRecurseToStar) {
  const auto h = matching_host(3, 0, 0, 0);
  const Witness w = as_witness(extract_from_matching(h.g, h.m, h.v, 3, 3, 3, h.chains));
  EXPECT_EQ(w.family, (FamilyId{K::kSubdividedStar, 3, false}));
  EXPECT_TRUE(validate_witness(h.g, w));
}

TEST(MatchingTest, SubdividedStarDirect) {
  // Outer edges of a subdivided star, chains of length two to the centre.
  const Graph g = generate({K::kSubdividedStar, 4, false}).graph;
  const int center = 8;
  std::vector<MatchingEdge> m;
  for (int i = 0; i < 4; ++i) m.push_back({i, 4 + i});
  const auto r = extract_from_matching(g, m, center, 4, 4, 3);
  const Witness w = as_witness(r);
  EXPECT_EQ(w.family, (FamilyId{K::kSubdividedStar, 4, false}));
  EXPECT_TRUE(validate_witness(g, w));
}

TEST(MatchingTest, RejectsNonInducedMatching) {
  const Graph p4 = Graph::path(4);
  const std::vector<MatchingEdge> m = {{0, 1}, {1, 2}};
  EXPECT_THROW(extract_from_matching(p4, m, 3, 2, 2, 3), std::invalid_argument);
}

TEST(MatchingTest, TooFewEdges) {
  const auto h = matching_host(2, 0, 0, 0);
  const auto r = extract_from_matching(h.g, h.m, h.v, 3, 3, 3, h.chains);
  const auto* ins = std::get_if<InsufficientSize>(&r);
  ASSERT_TRUE(ins);
  EXPECT_EQ(ins->stage.substr(0, 8), "matching");
}

EmbeddingMap identity_map(int k) {
  EmbeddingMap e(k);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

TEST(HalfSplitTest, ApexHost) {
  const Graph g = generate({K::kHalfSplitApex, 19, false}).graph;
  const auto r = extract_from_half_split(g, identity_map(38), 3);
  const auto* w = std::get_if<Witness>(&r);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->family, (FamilyId{K::kHalfSplitApex, 3, false}));
  EXPECT_TRUE(validate_witness(g, *w));
}

TEST(HalfSplitTest, PendantHost) {
  const Graph g = generate({K::kHalfSplitPendant, 19, false}).graph;
  const auto r = extract_from_half_split(g, identity_map(38), 3);
  const auto* w = std::get_if<Witness>(&r);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->family, (FamilyId{K::kHalfSplitPendant, 3, false}));
  EXPECT_TRUE(validate_witness(g, *w));
}

TEST(HalfSplitTest, VertexOnUpperSide) {
  // Extra vertex z adjacent to b_2..b_N.
  const int big = 19;
  const Graph base = generate({K::kHalfSplit, big, false}).graph;
  GraphBuilder b(2 * big + 1);
  for (const auto& [p, q] : base.edges()) b.add_edge(p, q);
  for (int j = 1; j < big; ++j) b.add_edge(2 * big, big + j);
  const Graph g = std::move(b).build();
  ASSERT_TRUE(is_prime(g));
  const auto r = extract_from_half_split(g, identity_map(2 * big), 3);
  const auto* w = std::get_if<Witness>(&r);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->family, (FamilyId{K::kHalfSplitPendant, 3, true}));
  EXPECT_TRUE(validate_witness(g, *w));
}

TEST(HalfSplitTest, RandomExtensions) {
  std::mt19937_64 rng(71);
  const int big = 19;
  const Graph base = generate({K::kHalfSplit, big, false}).graph;
  int tried = 0;
  int chains = 0;
  while (tried < 25) {
    const int extra = 1 + static_cast<int>(rng() % 6);
    GraphBuilder b(2 * big + extra);
    for (const auto& [p, q] : base.edges()) b.add_edge(p, q);
    std::bernoulli_distribution coin(0.3);
    for (int u = 2 * big; u < 2 * big + extra; ++u)
      for (int w = 0; w < u; ++w)
        if (coin(rng)) b.add_edge(u, w);
    const Graph g = std::move(b).build();
    if (!is_prime(g)) continue;
    ++tried;
    const auto r = extract_from_half_split(g, identity_map(2 * big), 3);
    if (const auto* w = std::get_if<Witness>(&r)) {
      EXPECT_TRUE(validate_witness(g, *w));
    } else if (const auto* c = std::get_if<ChainWitness>(&r)) {
      EXPECT_TRUE(validate_witness(g, *c));
      ++chains;
    } else {
      ADD_FAILURE() << "half-split host of height 19 ran short";
    }
  }
  RecordProperty("chain_outcomes", chains);
}

TEST(HalfSplitTest, Preconditions) {
  const Graph g = generate({K::kHalfSplitApex, 5, false}).graph;
  EXPECT_THROW(extract_from_half_split(g, identity_map(9), 3), std::invalid_argument);
  EXPECT_THROW(extract_from_half_split(g, identity_map(10), 2), std::invalid_argument);
}

TEST(DriverTest, HalfGraphHost) {
  const Graph g = generate({K::kHalfGraph, 12, false}).graph;
  const auto r = unavoidable_witness(g, 4);
  const auto* w = std::get_if<Witness>(&r);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->family, (FamilyId{K::kHalfGraph, 4, false}));
}

TEST(DriverTest, ComplementedHost) {
  const Graph g = complement(generate({K::kSubdividedStar, 10, false}).graph);
  const auto r = unavoidable_witness(g, 4);
  const auto* w = std::get_if<Witness>(&r);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->family.complemented);
  EXPECT_TRUE(validate_witness(g, *w));
}

TEST(DriverTest, NonPrimeInput) {
  const auto r = unavoidable_witness(Graph::complete(5), 3);
  const auto* np = std::get_if<NonPrime>(&r);
  ASSERT_TRUE(np);
  EXPECT_GE(np->set.size(), 2);
  EXPECT_TRUE(is_homogeneous_set(Graph::complete(5), np->set));
  EXPECT_THROW(unavoidable_witness(Graph::path(5), 2), std::invalid_argument);
}

TEST(DriverTest, PipelineWithoutFastPath) {
  std::mt19937_64 rng(73);
  DriverOptions opts;
  opts.fast_path = false;
  for (const FamilyId id : {FamilyId{K::kThickSpider, 12, false}, FamilyId{K::kThinSpider, 12, false},
                            FamilyId{K::kHalfGraph, 12, true}, FamilyId{K::kLineK2n, 12, true}}) {
    const Graph g = generate(id).graph;
    const auto r = unavoidable_witness(g, 4, opts);
    if (const auto* w = std::get_if<Witness>(&r)) EXPECT_TRUE(validate_witness(g, *w));
    if (const auto* c = std::get_if<ChainWitness>(&r)) EXPECT_TRUE(validate_witness(g, *c));
    EXPECT_FALSE(std::holds_alternative<NonPrime>(r));
  }
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = testing::random_prime_graph(30, rng, 0.3);
    const auto r = unavoidable_witness(g, 4, opts);
    if (const auto* w = std::get_if<Witness>(&r)) EXPECT_TRUE(validate_witness(g, *w));
    if (const auto* c = std::get_if<ChainWitness>(&r)) EXPECT_TRUE(validate_witness(g, *c));
    if (const auto* ins = std::get_if<InsufficientSize>(&r)) {
      EXPECT_FALSE(ins->trace.empty());
    }
  }
}

TEST(DriverTest, ComplementDuality) {
  std::mt19937_64 rng(79);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = testing::random_prime_graph(24, rng, 0.4);
    const auto r = unavoidable_witness(g, 4);
    const auto rc = unavoidable_witness(complement(g), 4);
    EXPECT_EQ(std::holds_alternative<InsufficientSize>(r),
              std::holds_alternative<InsufficientSize>(rc));
  }
}

}  // namespace
}  // namespace primewit
