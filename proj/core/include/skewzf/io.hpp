#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "skewzf/graph.hpp"

namespace skewzf {

/// Malformed graph6 or edge-list text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. The 1-, 4- and 8-byte size prefixes are all
/// understood, but orders above 2^20 are refused. Nonzero padding bits are
/// rejected so that parse/emit is a bijection.
Graph parse_graph6(std::string_view text);

/// graph6 encoding without header or newline.
std::string emit_graph6(const Graph& g);

/// Parses "n m" followed by m lines "u v" (0-based). Blank lines and lines
/// starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

std::string emit_edge_list(const Graph& g);

/// Guesses the format: edge-list if the first token is a decimal integer
/// followed by another integer on the same line, graph6 otherwise.
Graph parse_graph_text(std::string_view text);

}  // namespace skewzf
