// modular_graphs.hpp
// The finite modular curve, pants, and flip graphs of a small-genus surface:
// vertices are homeomorphism types (canonical codes), edges carry the move
// counts between class representatives.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modgraph/combinatorial_map.hpp"
#include "modgraph/multigraph.hpp"
#include "modgraph/simple_graph.hpp"

namespace modgraph {

enum class ModularKind { curve, pants, flip };

ModularKind modular_kind_from_name(const std::string& name);
std::string modular_kind_name(ModularKind k);

struct ModularGraph {
  ModularKind kind = ModularKind::curve;
  int genus_param = 0;

  // Class codes; ascending for pants/flip.  Curve vertices are the curve
  // types themselves: "nonseparating", then "separating_i" by i.
  std::vector<std::string> vertex_codes;
  std::vector<std::string> vertex_labels;  // aligned with vertex_codes

  // outcome counts from each class representative, self-results excluded
  std::map<std::pair<std::string, std::string>, long long> directed_counts;
  std::map<std::string, long long> loop_counts;  // outcomes landing back home
  // undirected multiplicity: max of the two directions (the directions can
  // disagree; a triple edge reaches the dumbbell 3 ways, the dumbbell
  // returns 2 ways)
  std::map<std::pair<std::string, std::string>, long long> edge_multiplicities;
  std::set<std::pair<std::string, std::string>> simple_edges;  // support, a < b

  std::vector<CubicMultigraph> pants_reps;  // aligned, pants kind only
  std::vector<CombinatorialMap> flip_reps;  // aligned, flip kind only
};

// complete graph on floor(g/2)+1 curve types; loops at every vertex when g
// is odd, at all but the half-half separating type when g is even
ModularGraph build_modular_curve_graph(int g);

// BFS over connected cubic multigraph classes on 2g-2 vertices under the
// two-variant rewirings; loop moves and self-results become loops.
// Capability cap 2g-2 <= 12.
ModularGraph build_modular_pants_graph(int g);

// BFS over one-vertex triangulation classes on 4g-2 triangles under
// diagonal flips, seeded from the first chord diagram.  Cap 4g-2 <= 10.
ModularGraph build_modular_flip_graph(int g);

int modular_vertex_index(const ModularGraph& mg, const std::string& code);

// move outcomes from the class representative: out-edges plus self-results
long long modular_multi_degree(const ModularGraph& mg, int index);

// distinct neighboring classes, loops not counted
int modular_simple_degree(const ModularGraph& mg, int index);

struct ModularSummary {
  int p = 0;
  long long q_simple = 0;
  long long q_multi = 0;  // sum of undirected multiplicities
  long long loop_total = 0;
  std::optional<int> girth_simple;
  long long min_multi_degree = 0;
  long long max_multi_degree = 0;
  double mean_multi_degree = 0.0;
  int min_simple_degree = 0;
  int max_simple_degree = 0;
  double mean_simple_degree = 0.0;
};

ModularSummary graph_summary(const ModularGraph& mg);

// loopless simple quotient on the vertex order of vertex_codes; the input
// for genus bounds (loops and parallel edges do not change the genus)
SimpleGraph modular_simple_graph(const ModularGraph& mg);

std::string modular_to_dot(const ModularGraph& mg);
std::string modular_to_json(const ModularGraph& mg);

}  // namespace modgraph
