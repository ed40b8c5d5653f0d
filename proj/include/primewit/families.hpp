#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primewit/graph.hpp"
#include "primewit/isomorphism.hpp"
#include "primewit/witness.hpp"

namespace primewit {

// Vertex order inside every generator: a_1..a_n, then b_1..b_n, then the
// extra vertex (center / apex / pendant) last.
struct LabeledFamilyGraph {
  FamilyId id;
  Graph graph;
  std::vector<std::string> roles;
};

inline constexpr int kMaxFamilySize = 1 << 16;

// Throws std::out_of_range when id.n is outside 1..kMaxFamilySize.
LabeledFamilyGraph generate(const FamilyId& id);

// Exact search for an induced copy of generate(id).graph.
std::optional<EmbeddingMap> find_induced_copy(const Graph& host, const FamilyId& id);

// Families searched by find_witness_any, in priority order. Each is tried as
// given and then complemented.
const std::vector<FamilyKind>& outcome_families();

// Searches for a prime chain of exactly `length`. Source pairs are scanned in
// lexicographic order; longer chains are trimmed down.
std::optional<ChainWitness> find_prime_chain(const Graph& host, int length);

// First witness for a size-n outcome: families (plain, then complemented) in
// outcome_families() order, then a prime chain of length n. Requires n >= 3.
std::optional<AnyWitness> find_witness_any(const Graph& host, int n);

}  // namespace primewit
