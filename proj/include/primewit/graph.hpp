#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "primewit/vertex_set.hpp"

namespace primewit {

class Graph;

// Mutable staging area; Graph itself never changes after construction.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool present) {
    present ? add_edge(u, v) : remove_edge(u, v);
  }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }

  Graph build() &&;
  Graph build() const&;

 private:
  void check(int u, int v) const;

  std::vector<VertexSet> rows_;
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  // Non-neighbors of v, excluding v itself.
  VertexSet non_neighbors(int v) const;
  int degree(int v) const { return rows_[v].size(); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  bool is_independent(const VertexSet& s) const;
  bool is_clique(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // back_map[i] is the host vertex behind subgraph vertex i.
  std::vector<int> back_map;
};

// Vertices are re-indexed in the order given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Vertex v is mixed on s when it has both a neighbor and a non-neighbor in s
// (v itself is never counted).
bool is_mixed(const Graph& g, int v, const VertexSet& s);
bool is_complete_to(const Graph& g, int v, const VertexSet& s);
bool is_anticomplete_to(const Graph& g, int v, const VertexSet& s);

}  // namespace primewit
