#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "eccg/graph.hpp"

namespace eccg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// One graph6 line, optionally prefixed by the ">>graph6<<" header.
// Strict: size bytes are value+63 (single byte for n <= 62, '~' plus three
// bytes for 63 <= n <= 258047), then the upper triangle of the adjacency
// matrix in column order, packed big-endian six bits per byte, each byte
// offset by 63, zero padding. Errors carry the byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list text: '#' comment lines, then a header line "n <count>" (the
// bare "<n> [<m>]" form is also accepted), then one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Undirected DOT with numeric node ids. Output only.
std::string emit_dot(const Graph& g);

// Picks parse_edge_list when the text contains whitespace or comments,
// parse_graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace eccg
