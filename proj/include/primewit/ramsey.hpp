#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "primewit/graph.hpp"

namespace primewit {

// Colouring of the edges of K_m with colours 0..palette-1.
class EdgeColoring {
 public:
  EdgeColoring(int order, int palette);

  int order() const { return order_; }
  int palette() const { return palette_; }
  int color(int i, int j) const { return colors_[index(i, j)]; }
  void set(int i, int j, int c);

  // Graph on 0..m-1 whose edges are the pairs of colour c.
  Graph color_class(int c) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(j);
  }

  int order_;
  int palette_;
  std::vector<std::uint8_t> colors_;
};

struct MonochromaticSet {
  int color;
  std::vector<int> vertices;  // ascending
};

// Exact: the first colour c (in palette order) admitting a set of targets[c]
// vertices whose pairs all have colour c, with the lexicographically first
// such set. nullopt only when no colour admits one. Throws
// std::invalid_argument if targets.size() != palette.
std::optional<MonochromaticSet> ramsey_monochromatic(
    const EdgeColoring& coloring, std::span<const std::size_t> targets);

// Largest monochromatic set of colour c.
std::vector<int> max_monochromatic(const EdgeColoring& coloring, int c);

}  // namespace primewit
