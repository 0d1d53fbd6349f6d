#pragma once

#include <string>
#include <string_view>

#include "cliquevec/graphs.hpp"

namespace cliquevec {

// graph6 encoding per the de-facto format: N(n) header, then the upper
// triangle of the adjacency matrix column by column, packed big-endian
// into 6-bit chunks offset by 63. Supports 0 <= n <= 258047.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Plain text: a first line "n <count>", then one "u v" line per edge with
// 1-based labels.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace cliquevec
