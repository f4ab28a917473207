// enumeration.hpp
// Isomorphism-free enumeration of cubic multigraphs and one-puncture
// triangulations, plus brute-force matching scans used as ground truth.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "modgraph/combinatorial_map.hpp"
#include "modgraph/multigraph.hpp"

namespace modgraph {

enum class GraphFilter { all, connected, simple, simple_connected };

struct EnumerationCounts {
  long long total = 0;
  long long connected = 0;
  long long simple = 0;
  long long simple_connected = 0;
};

struct EnumerationResult {
  int n_vertices = 0;
  std::vector<std::string> class_codes;  // strictly sorted, filtered as requested
  EnumerationCounts counts;              // over every class at this size
  std::string method;
};

GraphFilter graph_filter_from_name(const std::string& name);
std::string graph_filter_name(GraphFilter f);

// Scan all (3N-1)!! matchings and deduplicate the collapsed graphs.
// Capability-capped at N <= 6 (the N = 6 scan walks 34459425 leaves).
EnumerationResult brute_force_classes(int n_vertices, GraphFilter filter = GraphFilter::all);

// Every vertex-labeled graph reachable from a matching, with the exact
// number of matchings that collapse to it.  Ground truth for the fiber
// formula; same N <= 6 cap.
struct LabeledFiber {
  CubicMultigraph graph;
  long long matchings = 0;
};
std::vector<LabeledFiber> brute_force_labeled_fibers(int n_vertices);

// Grow connected graphs one edge unit at a time (each unit touches the
// existing component), deduplicating partial shapes by canonical code, then
// compose disconnected classes as multisets of connected ones.  N <= 14.
EnumerationResult enumerate_cubic_multigraphs(int n_vertices, GraphFilter filter = GraphFilter::all);

// connected class representatives at the given size, sorted by code
std::vector<CubicMultigraph> connected_class_reps(int n_vertices);

// number of matchings whose glued surface has exactly one boundary walk
long long count_one_puncture_pairings(int n_vertices);

// scan all matchings at N <= 6 and deduplicate one-puncture maps
EnumerationResult brute_force_one_puncture_classes(int n_vertices);

struct TriangulationClass {
  CombinatorialMap rep;
  long long aut = 0;  // dart bijections commuting with sigma and alpha
};

// One-puncture triangulation classes on N = 4g-2 triangles, enumerated as
// chord diagrams: with the boundary walk pinned to d -> d+1, a class is a
// fixed-point-free involution alpha whose sigma = walk∘alpha splits into
// 3-cycles, taken up to the 3N rotations.  Capability cap 4g-2 <= 10.
std::vector<TriangulationClass> one_vertex_triangulation_classes(int g);
EnumerationResult enumerate_one_vertex_triangulations(int g);

// first chord diagram the backtracking finds; deterministic, same cap
CombinatorialMap first_one_vertex_triangulation(int g);

}  // namespace modgraph
