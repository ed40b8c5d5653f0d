#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "primewit/graph.hpp"

namespace primewit {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Decodes one graph6 string. A leading ">>graph6<<" header is accepted and a
// single trailing newline (optionally preceded by '\r') is ignored. Non-zero
// padding bits are rejected so that emit_graph6(parse_graph6(s)) == s.
Graph parse_graph6(std::string_view text);

// Encodes g without header or trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace primewit
