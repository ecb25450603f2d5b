#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "edgespec/graph.hpp"

namespace edgespec {

/// Edge-list text: a header line `n m`, then m lines `u v` with u < v in
/// ascending lexicographic order.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// graph6 encoding (no trailing newline, no `>>graph6<<` header).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

/// Loads a graph from a path to an edge-list file (or a file whose first
/// line is graph6), or else interprets `arg` itself as a graph6 string.
Graph load_graph_argument(const std::string& arg);

}  // namespace edgespec
