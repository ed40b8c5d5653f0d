#pragma once

#include <string>

#include <json.hpp>

#include "primewit/extraction.hpp"

namespace primewit {

// {"family","n","complemented","embedding","provenance"}
nlohmann::ordered_json to_json(const Witness& w);
// Same keys, family "prime-chain", with "chain" (and "source_set" when set)
// instead of "embedding", plus "trimmed".
nlohmann::ordered_json to_json(const ChainWitness& w);
// {"stage","needed","had","trace"}; "needed" is a decimal or "~2^(...)" string.
nlohmann::ordered_json to_json(const InsufficientSize& r);
// {"nonprime": [vertices]}
nlohmann::ordered_json to_json(const NonPrime& r);
nlohmann::ordered_json to_json(const DriverResult& r);

// Inverse of to_json for witnesses. Throws std::invalid_argument on shape errors.
AnyWitness witness_from_json(const nlohmann::ordered_json& j);

// "{0,2,5}"
std::string format_vertex_set(const VertexSet& s);

}  // namespace primewit
