#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primewit/graph.hpp"

namespace primewit {

// Lexicographically first clique of exactly k vertices, or nullopt.
std::optional<std::vector<int>> find_clique_of_size(const Graph& g, int k);

struct CliqueResult {
  std::vector<int> vertices;  // ascending
  // False when the node budget ran out; `vertices` is then the best found.
  bool optimal = true;
};

// Branch and bound with a greedy colouring bound, seeded by a greedy clique.
CliqueResult maximum_clique(const Graph& g, std::uint64_t node_budget = 2'000'000);
CliqueResult maximum_independent_set(const Graph& g,
                                     std::uint64_t node_budget = 2'000'000);

}  // namespace primewit
