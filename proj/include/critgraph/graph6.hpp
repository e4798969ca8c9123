#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Canonical graph6 serialization (the nauty text format). Short form covers
// n <= 62; the 4-byte long form covers larger n up to the library cap.
// Round-trips preserve vertex order.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

// Splits a text blob into graph6 lines (blank lines and '>'-comments skipped)
// and decodes each one.
std::vector<Graph> graph6_decode_lines(std::string_view text);

}  // namespace critgraph
