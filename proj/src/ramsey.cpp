#include "primewit/ramsey.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "primewit/cliques.hpp"

namespace primewit {

EdgeColoring::EdgeColoring(int order, int palette)
    : order_(order),
      palette_(palette),
      colors_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0) {
  if (order < 0) throw std::invalid_argument("negative colouring order");
  if (palette < 1 || palette > 255) throw std::invalid_argument("palette size out of range");
}

void EdgeColoring::set(int i, int j, int c) {
  if (i == j || i < 0 || j < 0 || i >= order_ || j >= order_)
    throw std::out_of_range("bad edge for colouring");
  if (c < 0 || c >= palette_)
    throw std::out_of_range("colour " + std::to_string(c) + " outside palette");
  colors_[index(i, j)] = static_cast<std::uint8_t>(c);
  colors_[index(j, i)] = static_cast<std::uint8_t>(c);
}

Graph EdgeColoring::color_class(int c) const {
  GraphBuilder b(order_);
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (color(i, j) == c) b.add_edge(i, j);
  return std::move(b).build();
}

std::optional<MonochromaticSet> ramsey_monochromatic(
    const EdgeColoring& coloring, std::span<const std::size_t> targets) {
  if (static_cast<int>(targets.size()) != coloring.palette())
    throw std::invalid_argument("ramsey_monochromatic: " +
                                std::to_string(targets.size()) + " targets for " +
                                std::to_string(coloring.palette()) + " colours");
  for (int c = 0; c < coloring.palette(); ++c) {
    if (targets[c] > static_cast<std::size_t>(coloring.order())) continue;
    if (auto s = find_clique_of_size(coloring.color_class(c),
                                     static_cast<int>(targets[c])))
      return MonochromaticSet{c, std::move(*s)};
  }
  return std::nullopt;
}

std::vector<int> max_monochromatic(const EdgeColoring& coloring, int c) {
  return maximum_clique(coloring.color_class(c),
                        std::numeric_limits<std::uint64_t>::max())
      .vertices;
}

}  // namespace primewit
