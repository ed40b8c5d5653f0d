#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "primewit/chains.hpp"
#include "primewit/graph.hpp"

namespace primewit {

enum class FamilyKind {
  kSubdividedStar,    // 1-subdivision of K_{1,n}
  kLineK2n,           // line graph of K_{2,n}
  kThinSpider,
  kThickSpider,
  kHalfGraph,         // H_n
  kHalfSplit,         // H'_n
  kHalfSplitApex,     // H'_{n,I}
  kHalfSplitPendant,  // H*_n
  kMatching,          // n K_2
  kPrimeChain,        // canonical representative: induced path of length n
};

struct FamilyId {
  FamilyKind kind = FamilyKind::kHalfGraph;
  int n = 1;
  bool complemented = false;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

// "half-graph:5", "thin-spider:4!" ('!' = complemented). Also accepts the
// aliases "co-line-k2n" and "co-half-split-pendant".
std::optional<FamilyId> parse_family_spec(std::string_view spec);
std::string format_family_spec(const FamilyId& id);

struct Witness {
  FamilyId family;
  // Host vertices in pattern (generator) order.
  std::vector<int> embedding;
  std::string provenance;
};

struct ChainWitness {
  // Standalone chain (no source set) inducing a prime graph.
  Chain chain;
  int trimmed = 0;
  std::string provenance;
};

using AnyWitness = std::variant<Witness, ChainWitness>;

bool validate_witness(const Graph& host, const Witness& w);
bool validate_witness(const Graph& host, const ChainWitness& w);
bool validate_witness(const Graph& host, const AnyWitness& w);

}  // namespace primewit
