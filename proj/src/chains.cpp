#include "primewit/chains.hpp"

#include <stdexcept>
#include <string>

namespace primewit {

ChainCheck validate_chain(const Graph& g, std::span<const int> seq,
                          const VertexSet* source) {
  VertexSet seen(g.order());
  for (int v : seq) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("chain vertex out of range: " + std::to_string(v));
    if (seen.contains(v))
      throw std::invalid_argument("chain repeats vertex " + std::to_string(v));
    seen.insert(v);
  }
  auto fail = [](std::size_t i) { return ChainCheck{false, i}; };

  if (source) {
    if (seq.size() < 3) return fail(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (source->contains(seq[i]) != (i < 2)) return fail(i);
  }

  VertexSet preds(g.order());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i >= 2) {
      const int v = seq[i];
      const int nb = g.neighbors(v).intersection_size(preds);
      const bool unique = g.adjacent(v, seq[i - 1])
                              ? nb == 1
                              : static_cast<int>(i) - nb == 1;
      if (!unique) return fail(i);
    }
    preds.insert(seq[i]);
  }
  return {};
}

ChainSearch::ChainSearch(const Graph& g, const VertexSet& source)
    : g_(&g),
      source_(source),
      dist_(static_cast<std::size_t>(g.order()), 0),
      parent_(static_cast<std::size_t>(g.order()), -1) {
  const int anchor = source.first();
  if (source.size() < 2)
    throw std::invalid_argument("chain source set needs at least two vertices");

  VertexSet uniform(g.order());
  std::vector<int> queue;
  for (int w = 0; w < g.order(); ++w) {
    if (source.contains(w)) continue;
    if (is_mixed(g, w, source)) {
      dist_[w] = 1;
      queue.push_back(w);
    } else {
      uniform.insert(w);
    }
  }
  const VertexSet& anchor_nb = g.neighbors(anchor);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    VertexSet next = (g.neighbors(x) ^ anchor_nb) & uniform;
    next.for_each([&](int y) {
      dist_[y] = dist_[x] + 1;
      parent_[y] = x;
      queue.push_back(y);
    });
    uniform.subtract(next);
  }
}

std::optional<Chain> ChainSearch::chain_to(int v) const {
  if (v < 0 || v >= g_->order() || !reachable(v)) return std::nullopt;
  std::vector<int> path;
  for (int w = v; w >= 0; w = parent_[w]) path.push_back(w);
  const int first = path.back();
  const VertexSet& nb = g_->neighbors(first);
  Chain c;
  c.seq.push_back((source_ & nb).first());
  c.seq.push_back((source_ - nb).first());
  c.seq.insert(c.seq.end(), path.rbegin(), path.rend());
  c.source_set = source_;
  return c;
}

int ChainSearch::farthest() const {
  int best = -1;
  for (int v = 0; v < g_->order(); ++v)
    if (dist_[v] > 0 && (best < 0 || dist_[v] > dist_[best])) best = v;
  return best;
}

std::optional<Chain> find_chain(const Graph& g, const VertexSet& source, int v) {
  if (source.size() < 2)
    throw std::invalid_argument("find_chain: source set needs >= 2 vertices");
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("find_chain: target out of range");
  if (source.contains(v))
    throw std::invalid_argument("find_chain: target lies in the source set");
  return ChainSearch(g, source).chain_to(v);
}

bool chain_induces_prime(const Graph& g, std::span<const int> seq) {
  if (seq.size() < 4)
    throw std::invalid_argument("chain_induces_prime: length must be >= 3");
  if (!validate_chain(g, seq))
    throw std::invalid_argument("chain_induces_prime: not a chain");
  const int penultimate = seq[seq.size() - 2];
  for (int end : {seq[0], seq[1]}) {
    bool has_nb = false;
    bool has_non = false;
    for (int w : seq) {
      if (w == end || w == penultimate) continue;
      (g.adjacent(end, w) ? has_nb : has_non) = true;
    }
    if (!has_nb || !has_non) return false;
  }
  return true;
}

Chain trim_chain_to_prime(const Graph& g, const Chain& c) {
  if (c.length() <= 3)
    throw std::invalid_argument("trim_chain_to_prime: length must be > 3");
  if (!validate_chain(g, c.seq))
    throw std::invalid_argument("trim_chain_to_prime: not a chain");
  // v_t is uniform on {v_0, v_1, v_2}. Complementing when v_t misses them and
  // swapping v_0/v_1 so that v_0 ~ v_2 leaves v_1, ..., v_t prime; undo the
  // normalisation to decide which end to drop.
  const int v0 = c.seq[0];
  const int v2 = c.seq[2];
  const bool parity = g.adjacent(c.seq.back(), v0);
  const std::size_t drop = g.adjacent(v0, v2) == parity ? 0 : 1;
  Chain out;
  for (std::size_t i = 0; i < c.seq.size(); ++i)
    if (i != drop) out.seq.push_back(c.seq[i]);
  if (!chain_induces_prime(g, out))
    throw std::logic_error("trim_chain_to_prime: trimmed chain is not prime");
  return out;
}

Chain trim_chain_to_length(const Graph& g, Chain c, int length) {
  if (length < 3) throw std::invalid_argument("target chain length must be >= 3");
  if (c.length() < length)
    throw std::invalid_argument("chain shorter than target length");
  while (c.length() > length) c = trim_chain_to_prime(g, c);
  return c;
}

}  // namespace primewit
