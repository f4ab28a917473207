// simple_graph.hpp
// Loop-free, multiplicity-free graphs: the inputs to genus bounds and the
// exact embedding search.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modgraph/multigraph.hpp"

namespace modgraph {

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
};

SimpleGraph simple_graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int m, int n);

// drop loops and collapse multiplicities
SimpleGraph simple_quotient(const CubicMultigraph& g);

long long simple_edge_count(const SimpleGraph& g);
bool simple_is_connected(const SimpleGraph& g);

// shortest cycle length (>= 3), or nullopt for forests
std::optional<int> simple_girth(const SimpleGraph& g);

// text format: line 1 = n, then one "u v" line per edge (u < v, sorted)
std::string format_simple_graph(const SimpleGraph& g);
SimpleGraph parse_simple_graph(const std::string& text);

}  // namespace modgraph
