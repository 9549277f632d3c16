#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "cutlab/graph.hpp"

namespace cutlab {

using AnyGraph = std::variant<DirectedWeightedGraph, UndirectedGraph>;

/// Text format: `n <count> directed|undirected`, then `u v w` per edge
/// (w omitted for undirected). Blank lines and `#` comments are skipped.
AnyGraph parse_edge_list(std::istream& in);
AnyGraph parse_edge_list(const std::string& text);
AnyGraph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const DirectedWeightedGraph& g);
void write_edge_list(std::ostream& out, const UndirectedGraph& g);
std::string to_edge_list(const AnyGraph& g);
void save_edge_list(const std::string& path, const AnyGraph& g);

}  // namespace cutlab
