#include "primewit/witness.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "primewit/families.hpp"
#include "primewit/isomorphism.hpp"

namespace primewit {
namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 10> kNames = {{
    {FamilyKind::kSubdividedStar, "subdivided-star"},
    {FamilyKind::kLineK2n, "line-k2n"},
    {FamilyKind::kThinSpider, "thin-spider"},
    {FamilyKind::kThickSpider, "thick-spider"},
    {FamilyKind::kHalfGraph, "half-graph"},
    {FamilyKind::kHalfSplit, "half-split"},
    {FamilyKind::kHalfSplitApex, "half-split-apex"},
    {FamilyKind::kHalfSplitPendant, "half-split-pendant"},
    {FamilyKind::kMatching, "matching"},
    {FamilyKind::kPrimeChain, "prime-chain"},
}};

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (auto [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (auto [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

std::optional<FamilyId> parse_family_spec(std::string_view spec) {
  FamilyId id;
  if (spec.ends_with('!')) {
    id.complemented = true;
    spec.remove_suffix(1);
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view name = spec.substr(0, colon);
  const std::string_view size = spec.substr(colon + 1);
  if (name == "co-line-k2n" || name == "co-half-split-pendant") {
    name.remove_prefix(3);
    id.complemented = !id.complemented;
  }
  const auto kind = family_from_name(name);
  if (!kind) return std::nullopt;
  id.kind = *kind;
  const auto [end, ec] = std::from_chars(size.data(), size.data() + size.size(), id.n);
  if (ec != std::errc{} || end != size.data() + size.size() || id.n < 1 ||
      id.n > kMaxFamilySize)
    return std::nullopt;
  return id;
}

std::string format_family_spec(const FamilyId& id) {
  std::string s(family_name(id.kind));
  s += ':';
  s += std::to_string(id.n);
  if (id.complemented) s += '!';
  return s;
}

bool validate_witness(const Graph& host, const Witness& w) {
  if (w.family.kind == FamilyKind::kPrimeChain) return false;
  const auto pattern = generate(w.family);
  return is_induced_embedding(pattern.graph, host, w.embedding);
}

bool validate_witness(const Graph& host, const ChainWitness& w) {
  const auto& seq = w.chain.seq;
  for (int v : seq)
    if (v < 0 || v >= host.order()) return false;
  if (seq.size() < 4) return false;
  try {
    return validate_chain(host, seq).ok && chain_induces_prime(host, seq);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool validate_witness(const Graph& host, const AnyWitness& w) {
  return std::visit([&](const auto& x) { return validate_witness(host, x); }, w);
}

}  // namespace primewit
