#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "primewit/bounds.hpp"
#include "primewit/chains.hpp"
#include "primewit/graph.hpp"
#include "primewit/isomorphism.hpp"
#include "primewit/witness.hpp"

namespace primewit {

// A stage ran out of room. `needed` is the size the stage asks for (decimal
// or "~2^(...)" text), `had` what the input offered.
struct InsufficientSize {
  std::string stage;
  std::string needed;
  std::int64_t had = 0;
  std::vector<std::string> trace;
};

// Homogeneous-set certificate. Empty for graphs on at most two vertices.
struct NonPrime {
  VertexSet set;
};

using StageResult = std::variant<Witness, InsufficientSize>;
using HalfSplitResult = std::variant<Witness, ChainWitness, InsufficientSize>;
using DriverResult = std::variant<Witness, ChainWitness, InsufficientSize, NonPrime>;

enum class TripleCase {
  kAdjacentThenAnticomplete,   // y_i ~ x_i, anticomplete to later x and A
  kNonadjacentThenComplete,    // y_i !~ x_i, complete to later x and A
};

struct RegularTriple {
  VertexSet a;
  std::vector<int> x;
  std::vector<int> y;
  std::vector<TripleCase> cases;
};

bool validate_regular_triple(const Graph& g, const RegularTriple& t);

// One growth step. y is the lowest vertex mixed on A; A' is y's neighbours in
// A when they make up at least half of A (x = lowest non-neighbour), and the
// non-neighbours otherwise (x = lowest neighbour).
// Throws std::invalid_argument unless 1 < |A| < |V(g)| and the triple is
// regular; std::logic_error when nothing is mixed on A.
RegularTriple grow_regular_triple(const Graph& g, const RegularTriple& t);

// Ramsey targets (n1 + n, 2n - 1, n + n2, n + n2 - 1) for colours
// (a,b) = (0,0), (1,0), (0,1), (1,1).
//
// S must be independent; g should be prime (growth stops early otherwise).
// The triple is grown from (S, {}, {}) until |X| reaches the Ramsey bound or
// |A| < 2, then the exact Ramsey search runs on whatever length was reached.
// Outcomes: thin or thick spider (n), complemented line-k2n (n), half-graph
// (n), matching (n1), half-split (n2).
StageResult extract_from_independent_set(const Graph& g, const VertexSet& s, int n,
                                         int n1, int n2);

using MatchingEdge = std::pair<int, int>;

// `m` must be an induced matching avoiding v. chains[i], when supplied, is a
// chain from {m[i].first, m[i].second} to v of length <= t whose first two
// vertices are the ends of m[i]; otherwise find_chain supplies it. n_prime is
// the half-split height. Outcomes: subdivided star, half-graph,
// complemented line-k2n, thin or thick spider (all n), half-split (n_prime).
// When no colour reaches its Ramsey target the largest (0,0,0) set is used
// for the recursion.
StageResult extract_from_matching(const Graph& g, const std::vector<MatchingEdge>& m,
                                  int v, int n, int n_prime, int t,
                                  std::optional<std::vector<Chain>> chains = std::nullopt);

// `emb` lists a_1..a_N, b_1..b_N of an induced half-split graph of height N.
// Returns a prime chain of length n (from a chain of length n + 1), or one of
// half-split-apex, half-split-pendant, complemented half-split-pendant at n.
HalfSplitResult extract_from_half_split(const Graph& g, const EmbeddingMap& emb, int n);

struct DriverOptions {
  // Try direct family search before the extraction pipeline.
  bool fast_path = true;
  // Node budget for the maximum independent set / clique searches.
  std::uint64_t clique_budget = 2'000'000;
};

// Every returned witness has been re-validated against g.
DriverResult unavoidable_witness(const Graph& g, int n, const DriverOptions& opts = {});

}  // namespace primewit
