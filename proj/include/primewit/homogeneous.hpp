#pragma once

#include <optional>
#include <vector>

#include "primewit/graph.hpp"

namespace primewit {

// A set X with 2 <= |X| < n such that every vertex outside X is complete or
// anticomplete to X.
bool is_homogeneous_set(const Graph& g, const VertexSet& x);

// Smallest set containing `seed` (|seed| >= 2) that no outside vertex is mixed
// on. Equals the whole vertex set when no homogeneous set contains `seed`.
VertexSet homogeneous_closure(const Graph& g, const VertexSet& seed);

// First homogeneous set found when seeding the closure with pairs {u,v} in
// lexicographic order. Always nullopt for n <= 2.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);

enum class SmallGraphConvention {
  // Graphs on at most two vertices are reported as not prime.
  kNonPrime,
  // The literal reading of the definition: no homogeneous set exists, so
  // they are prime.
  kVacuouslyPrime,
};

bool is_prime(const Graph& g,
              SmallGraphConvention small = SmallGraphConvention::kNonPrime);

inline constexpr int kBruteForceMaxOrder = 20;

// Every homogeneous set, by scanning all subsets. Throws std::invalid_argument
// for graphs above kBruteForceMaxOrder vertices.
std::vector<VertexSet> brute_force_homogeneous(const Graph& g);

}  // namespace primewit
