#include "primewit/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace primewit {
namespace {

std::vector<int> sorted_neighbor_degrees(const Graph& g, int v) {
  std::vector<int> d;
  g.neighbors(v).for_each([&](int u) { d.push_back(g.degree(u)); });
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

// Host vertex h can host pattern vertex p only if, for each i, h has at least
// i+1 neighbors of degree >= the i-th largest pattern-neighbor degree.
bool dominates(std::span<const int> host_nd, std::span<const int> pat_nd) {
  if (host_nd.size() < pat_nd.size()) return false;
  for (std::size_t i = 0; i < pat_nd.size(); ++i)
    if (host_nd[i] < pat_nd[i]) return false;
  return true;
}

std::vector<int> search_order(const Graph& pattern) {
  const int k = pattern.order();
  std::vector<int> order;
  std::vector<int> attached(static_cast<std::size_t>(k), 0);
  VertexSet placed(k);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    for (int p = 0; p < k; ++p) {
      if (placed.contains(p)) continue;
      if (best < 0 || attached[p] > attached[best] ||
          (attached[p] == attached[best] &&
           pattern.degree(p) > pattern.degree(best)))
        best = p;
    }
    placed.insert(best);
    order.push_back(best);
    pattern.neighbors(best).for_each([&](int q) { ++attached[q]; });
  }
  return order;
}

}  // namespace

bool is_induced_embedding(const Graph& pattern, const Graph& host,
                          std::span<const int> map) {
  if (static_cast<int>(map.size()) != pattern.order()) return false;
  VertexSet used(host.order());
  for (int h : map) {
    if (h < 0 || h >= host.order() || used.contains(h)) return false;
    used.insert(h);
  }
  for (int p = 0; p < pattern.order(); ++p)
    for (int q = p + 1; q < pattern.order(); ++q)
      if (pattern.adjacent(p, q) != host.adjacent(map[p], map[q])) return false;
  return true;
}

std::optional<EmbeddingMap> find_induced_embedding(const Graph& pattern,
                                                   const Graph& host,
                                                   const EmbeddingOptions& opts) {
  const int k = pattern.order();
  const int n = host.order();
  if (k == 0) return EmbeddingMap{};
  if (k > n) return std::nullopt;
  const bool colored = !opts.pattern_colors.empty() && !opts.host_colors.empty();

  std::vector<std::vector<int>> host_nd(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) host_nd[h] = sorted_neighbor_degrees(host, h);

  std::vector<VertexSet> filter(static_cast<std::size_t>(k), VertexSet(n));
  for (int p = 0; p < k; ++p) {
    const auto pat_nd = sorted_neighbor_degrees(pattern, p);
    const int deg = pattern.degree(p);
    const int nondeg = k - 1 - deg;
    for (int h = 0; h < n; ++h) {
      if (opts.allowed && !opts.allowed->contains(h)) continue;
      if (colored && opts.pattern_colors[p] != opts.host_colors[h]) continue;
      if (host.degree(h) < deg || n - 1 - host.degree(h) < nondeg) continue;
      if (!dominates(host_nd[h], pat_nd)) continue;
      filter[p].insert(h);
    }
    if (filter[p].empty()) return std::nullopt;
  }

  const std::vector<int> order = search_order(pattern);
  std::vector<VertexSet> cand(static_cast<std::size_t>(k));
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  VertexSet used(n);

  auto fill = [&](int level) {
    const int p = order[level];
    cand[level] = filter[p] - used;
    for (int j = 0; j < level && !cand[level].empty(); ++j) {
      if (pattern.adjacent(p, order[j]))
        cand[level] &= host.neighbors(image[j]);
      else
        cand[level].subtract(host.neighbors(image[j]));
    }
  };

  int level = 0;
  fill(0);
  while (level >= 0) {
    if (image[level] >= 0) {
      used.erase(image[level]);
      image[level] = -1;
    }
    const int h = cand[level].first();
    if (h < 0) {
      --level;
      continue;
    }
    cand[level].erase(h);
    image[level] = h;
    used.insert(h);
    if (level + 1 == k) {
      EmbeddingMap map(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) map[order[i]] = image[i];
      return map;
    }
    ++level;
    image[level] = -1;
    fill(level);
  }
  return std::nullopt;
}

std::vector<std::vector<int>> refine_colors(std::span<const Graph* const> graphs) {
  std::vector<std::vector<int>> colors;
  for (const Graph* g : graphs) {
    std::vector<int> c(static_cast<std::size_t>(g->order()));
    for (int v = 0; v < g->order(); ++v) c[v] = g->degree(v);
    colors.push_back(std::move(c));
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::vector<std::pair<int, std::vector<int>>>> sigs(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nb;
        g.neighbors(v).for_each([&](int u) { nb.push_back(colors[gi][u]); });
        std::sort(nb.begin(), nb.end());
        auto sig = std::make_pair(colors[gi][v], std::move(nb));
        ids.emplace(sig, 0);
        sigs[gi].push_back(std::move(sig));
      }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
      for (std::size_t v = 0; v < sigs[gi].size(); ++v)
        colors[gi][v] = ids.at(sigs[gi][v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colors;
}

std::optional<EmbeddingMap> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count())
    return std::nullopt;
  const Graph* both[] = {&g, &h};
  auto colors = refine_colors(both);
  auto hg = colors[0];
  auto hh = colors[1];
  std::sort(hg.begin(), hg.end());
  std::sort(hh.begin(), hh.end());
  if (hg != hh) return std::nullopt;
  EmbeddingOptions opts;
  opts.pattern_colors = std::move(colors[0]);
  opts.host_colors = std::move(colors[1]);
  return find_induced_embedding(g, h, opts);
}

}  // namespace primewit
