// genus_search.hpp
// Exact graph genus by exhausting rotation systems: every cyclic order of
// the darts around each vertex determines an oriented embedding whose faces
// are the orbits of the face-tracing permutation.  The minimum genus over
// all rotation systems is the graph genus.
#pragma once

#include "modgraph/simple_graph.hpp"

namespace modgraph {

inline constexpr long long kDefaultDartBudget = 1000000000;

// Requires a connected graph and prod_v (deg(v)-1)! <= dart_budget.
// Mirror-image rotation systems have equal genus, so the first vertex of
// degree >= 3 only takes rotations not above their own reversal; the search
// stops early once the girth-refined lower bound is attained.
long long exact_graph_genus(const SimpleGraph& g, long long dart_budget = kDefaultDartBudget);

}  // namespace modgraph
