#ifndef AZI_GRAPH6_HPP
#define AZI_GRAPH6_HPP

#include "azi/graph.hpp"

#include <string>
#include <vector>

namespace azi {

// Standard graph6 line (no trailing newline). Supports the long form for
// n > 62 on both sides.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header prefix. Strict about length and
// zero padding bits; throws Error{ParseError} on malformed input.
Graph graph6_decode(const std::string& line);

// Convenience: one graph per non-empty line.
std::vector<Graph> graph6_decode_lines(const std::string& text);

} // namespace azi

#endif
