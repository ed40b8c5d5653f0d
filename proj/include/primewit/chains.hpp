#pragma once

#include <optional>
#include <span>
#include <vector>

#include "primewit/graph.hpp"

namespace primewit {

// v_0, ..., v_t where each v_i (i > 0) has v_{i-1} as its unique neighbor or
// unique non-neighbor among v_0..v_{i-1}. The length is t.
struct Chain {
  std::vector<int> seq;
  std::optional<VertexSet> source_set;

  int length() const { return static_cast<int>(seq.size()) - 1; }
  int target() const { return seq.back(); }
};

struct ChainCheck {
  bool ok = true;
  // Index of the first offending position; for a source-set length violation
  // this is the sequence size.
  std::optional<std::size_t> first_violation;

  explicit operator bool() const { return ok; }
};

// Checks the predecessor rule and, when `source` is given, the chain-from-set
// clauses (length >= 2, v_0, v_1 in source, later vertices outside).
// Throws std::invalid_argument on repeated or out-of-range vertices.
ChainCheck validate_chain(const Graph& g, std::span<const int> seq,
                          const VertexSet* source = nullptr);
inline ChainCheck validate_chain(const Graph& g, const Chain& c) {
  return validate_chain(g, c.seq, c.source_set ? &*c.source_set : nullptr);
}

// Breadth-first search over the auxiliary digraph rooted at the source set.
// Node eta reaches w when w is mixed on the source; x reaches y when y is
// uniform on the source but mixed on source + {x}. Lower vertex indices are
// expanded first.
class ChainSearch {
 public:
  ChainSearch(const Graph& g, const VertexSet& source);

  bool reachable(int v) const { return dist_[v] > 0; }
  // Chain length to v (BFS depth + 1), or -1.
  int chain_length(int v) const { return dist_[v] > 0 ? dist_[v] + 1 : -1; }
  std::optional<Chain> chain_to(int v) const;
  // Reachable vertex with the longest chain; lowest index on ties. -1 if
  // nothing is reachable.
  int farthest() const;

 private:
  const Graph* g_;
  VertexSet source_;
  std::vector<int> dist_;    // 0 = unreached or in source
  std::vector<int> parent_;  // -1 = eta
};

// A chain from `source` to v, or nullopt exactly when some homogeneous set
// contains source but not v. Requires |source| >= 2 and v outside source.
std::optional<Chain> find_chain(const Graph& g, const VertexSet& source, int v);

// For a valid chain of length >= 3: v_0 and v_1 each have a neighbor and a
// non-neighbor in the chain other than v_{t-1}. Equivalent to the chain
// inducing a prime graph.
bool chain_induces_prime(const Graph& g, std::span<const int> seq);
inline bool chain_induces_prime(const Graph& g, const Chain& c) {
  return chain_induces_prime(g, c.seq);
}

// Drops v_0 or v_1 from a chain of length t > 3 so that the remaining chain
// of length t-1 induces a prime graph. The source set is not carried over.
Chain trim_chain_to_prime(const Graph& g, const Chain& c);

// Repeated trimming down to the requested length (>= 3).
Chain trim_chain_to_length(const Graph& g, Chain c, int length);

}  // namespace primewit
