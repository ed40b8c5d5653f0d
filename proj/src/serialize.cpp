#include "primewit/serialize.hpp"

#include <stdexcept>

namespace primewit {

using json = nlohmann::ordered_json;

json to_json(const Witness& w) {
  return {{"family", std::string(family_name(w.family.kind))},
          {"n", w.family.n},
          {"complemented", w.family.complemented},
          {"embedding", w.embedding},
          {"provenance", w.provenance}};
}

json to_json(const ChainWitness& w) {
  json j = {{"family", std::string(family_name(FamilyKind::kPrimeChain))},
            {"n", w.chain.length()},
            {"complemented", false},
            {"chain", w.chain.seq}};
  if (w.chain.source_set) j["source_set"] = w.chain.source_set->to_vector();
  j["trimmed"] = w.trimmed;
  j["provenance"] = w.provenance;
  return j;
}

json to_json(const InsufficientSize& r) {
  return {{"stage", r.stage}, {"needed", r.needed}, {"had", r.had}, {"trace", r.trace}};
}

json to_json(const NonPrime& r) { return {{"nonprime", r.set.to_vector()}}; }

json to_json(const DriverResult& r) {
  return std::visit([](const auto& x) { return to_json(x); }, r);
}

AnyWitness witness_from_json(const json& j) {
  try {
    const auto name = j.at("family").get<std::string>();
    const auto kind = family_from_name(name);
    if (!kind) throw std::invalid_argument("unknown family '" + name + "'");
    if (*kind == FamilyKind::kPrimeChain) {
      ChainWitness w;
      w.chain.seq = j.at("chain").get<std::vector<int>>();
      w.trimmed = j.value("trimmed", 0);
      w.provenance = j.value("provenance", "");
      return w;
    }
    Witness w;
    w.family = {*kind, j.at("n").get<int>(), j.at("complemented").get<bool>()};
    w.embedding = j.at("embedding").get<std::vector<int>>();
    w.provenance = j.value("provenance", "");
    return w;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad witness JSON: ") + e.what());
  }
}

std::string format_vertex_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  });
  return out + "}";
}

}  // namespace primewit
