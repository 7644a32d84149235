#ifndef MINRANK_GRAPH6_HPP
#define MINRANK_GRAPH6_HPP

#include <string>
#include <string_view>

#include "minrank/graph.hpp"

namespace minrank {

/// Decodes one graph6 line (no ">>graph6<<" header, no trailing newline).
/// Throws ParseError carrying the offending byte offset.
Graph from_graph6(std::string_view text);

/// Minimal-length graph6 encoding. Throws std::invalid_argument above order 62.
std::string to_graph6(const Graph& g);

}  // namespace minrank

#endif  // MINRANK_GRAPH6_HPP
