#include "primewit/graph.hpp"

#include <stdexcept>
#include <string>

namespace primewit {

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void GraphBuilder::check(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::out_of_range("vertex out of range: " + std::to_string(u) +
                            "," + std::to_string(v));
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
}

void GraphBuilder::add_edge(int u, int v) {
  check(u, v);
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void GraphBuilder::remove_edge(int u, int v) {
  check(u, v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.rows_ = std::move(rows_);
  rows_.clear();
  return g;
}

Graph GraphBuilder::build() const& {
  Graph g;
  g.rows_ = rows_;
  return g;
}

Graph::Graph(int n) : Graph(GraphBuilder(n).build()) {}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::complete(int n) { return complement(Graph(n)); }

Graph Graph::path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

VertexSet Graph::non_neighbors(int v) const {
  VertexSet s = rows_[v].complemented();
  s.erase(v);
  return s;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += static_cast<std::size_t>(r.size());
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && !rows_[v].intersects(s); });
  return ok;
}

bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  const int k = s.size();
  s.for_each([&](int v) { ok = ok && rows_[v].intersection_size(s) == k - 1; });
  return ok;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    g.non_neighbors(u).for_each([&](int v) {
      if (v > u) b.add_edge(u, v);
    });
  return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  VertexSet seen(g.order());
  for (int v : vertices) {
    if (v < 0 || v >= g.order())
      throw std::out_of_range("vertex out of range: " + std::to_string(v));
    if (seen.contains(v))
      throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    seen.insert(v);
  }
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return {std::move(b).build(), std::vector<int>(vertices.begin(), vertices.end())};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, s.to_vector());
}

bool is_mixed(const Graph& g, int v, const VertexSet& s) {
  VertexSet rest = s;
  rest.erase(v);
  const int adj = g.neighbors(v).intersection_size(rest);
  return adj > 0 && adj < rest.size();
}

bool is_complete_to(const Graph& g, int v, const VertexSet& s) {
  VertexSet rest = s;
  rest.erase(v);
  return rest.is_subset_of(g.neighbors(v));
}

bool is_anticomplete_to(const Graph& g, int v, const VertexSet& s) {
  return !g.neighbors(v).intersects(s);
}

}  // namespace primewit
