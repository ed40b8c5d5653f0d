#include "primewit/graph6.hpp"

#include <cstdint>

namespace primewit {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 36) - 1;

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw Graph6Error(pos, "unexpected end of input");
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > kBias + 63)
    throw Graph6Error(pos, "character out of range (" + std::to_string(c) + ")");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);

  std::uint64_t n = 0;
  const int first = sextet(text, pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos += 1;
  } else if (sextet(text, pos + 1) < 63) {
    for (std::size_t k = 1; k <= 3; ++k)
      n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + k));
    if (n < 63) throw Graph6Error(pos, "non-canonical order encoding");
    pos += 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k)
      n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + k));
    if (n <= 258047) throw Graph6Error(pos, "non-canonical order encoding");
    pos += 8;
  }
  if (n > static_cast<std::uint64_t>(1) << 20)
    throw Graph6Error(pos, "graph too large: " + std::to_string(n));

  const int order = static_cast<int>(n);
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars)
    throw Graph6Error(text.size(), "truncated adjacency data");
  if (text.size() - pos > chars)
    throw Graph6Error(pos + chars, "trailing garbage");

  GraphBuilder b(order);
  std::uint64_t k = 0;
  int i = 0;
  int j = 1;
  for (std::uint64_t c = 0; c < chars; ++c) {
    const int x = sextet(text, pos + c);
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (x >> bit) & 1;
      if (k >= bits) {
        if (set) throw Graph6Error(pos + c, "non-zero padding bits");
        continue;
      }
      if (set) b.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n > kMaxOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace primewit
