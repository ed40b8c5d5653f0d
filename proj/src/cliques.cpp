#include "primewit/cliques.hpp"

#include <algorithm>
#include <numeric>

namespace primewit {
namespace {

bool extend_to_size(const Graph& g, std::vector<int>& current, VertexSet cand, int k) {
  if (static_cast<int>(current.size()) == k) return true;
  while (!cand.empty()) {
    if (static_cast<int>(current.size()) + cand.size() < k) return false;
    const int v = cand.first();
    cand.erase(v);
    current.push_back(v);
    if (extend_to_size(g, current, cand & g.neighbors(v), k)) return true;
    current.pop_back();
  }
  return false;
}

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  CliqueResult run() {
    // Greedy seed: repeatedly take the highest-degree candidate.
    VertexSet cand = g_.all_vertices();
    while (!cand.empty()) {
      int best = -1;
      int best_deg = -1;
      cand.for_each([&](int v) {
        const int d = g_.neighbors(v).intersection_size(cand);
        if (d > best_deg) {
          best = v;
          best_deg = d;
        }
      });
      best_.push_back(best);
      cand &= g_.neighbors(best);
    }
    std::vector<int> current;
    expand(current, g_.all_vertices());
    std::sort(best_.begin(), best_.end());
    return {best_, !exhausted_};
  }

 private:
  void colour_order(VertexSet p, std::vector<int>& order, std::vector<int>& bound) {
    int colour = 0;
    while (!p.empty()) {
      ++colour;
      VertexSet q = p;
      while (!q.empty()) {
        const int v = q.first();
        q.erase(v);
        q.subtract(g_.neighbors(v));
        p.erase(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(std::vector<int>& current, VertexSet p) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    colour_order(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const int v = order[i];
      current.push_back(v);
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p.erase(v);
      if (exhausted_) return;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> best_;
};

}  // namespace

std::optional<std::vector<int>> find_clique_of_size(const Graph& g, int k) {
  if (k < 0 || k > g.order()) return std::nullopt;
  std::vector<int> current;
  if (extend_to_size(g, current, g.all_vertices(), k)) return current;
  return std::nullopt;
}

CliqueResult maximum_clique(const Graph& g, std::uint64_t node_budget) {
  if (g.order() == 0) return {};
  return MaxCliqueSearch(g, node_budget).run();
}

CliqueResult maximum_independent_set(const Graph& g, std::uint64_t node_budget) {
  return maximum_clique(complement(g), node_budget);
}

}  // namespace primewit
