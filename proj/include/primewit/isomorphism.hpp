#pragma once

#include <optional>
#include <span>
#include <vector>

#include "primewit/graph.hpp"

namespace primewit {

// pattern vertex -> host vertex. Injective; preserves adjacency and
// non-adjacency.
using EmbeddingMap = std::vector<int>;

bool is_induced_embedding(const Graph& pattern, const Graph& host,
                          std::span<const int> map);

struct EmbeddingOptions {
  // When set, only these host vertices may be used.
  std::optional<VertexSet> allowed;
  // When both are non-empty, pattern vertex p may only map to host vertex h
  // with pattern_colors[p] == host_colors[h].
  std::vector<int> pattern_colors;
  std::vector<int> host_colors;
};

// Exact backtracking search for an induced copy of pattern in host. Pattern
// vertices are visited in descending degree order with a preference for
// vertices attached to already placed ones; host candidates are pruned by
// degree, non-degree and neighbor-degree domination before the search.
// Deterministic: the first embedding in that order is returned.
std::optional<EmbeddingMap> find_induced_embedding(
    const Graph& pattern, const Graph& host, const EmbeddingOptions& opts = {});

// Stable colour refinement over the disjoint union of the given graphs; the
// returned colours are comparable between graphs.
std::vector<std::vector<int>> refine_colors(std::span<const Graph* const> graphs);

std::optional<EmbeddingMap> find_isomorphism(const Graph& g, const Graph& h);
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace primewit
