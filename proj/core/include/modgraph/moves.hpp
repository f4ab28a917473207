// moves.hpp
// Local rewriting: the two Whitehead-style rewirings across each non-loop
// edge of a cubic multigraph, loop-move markers, and diagonal flips on
// triangulated surfaces.
#pragma once

#include <vector>

#include "modgraph/combinatorial_map.hpp"
#include "modgraph/multigraph.hpp"
#include "modgraph/pairing.hpp"

namespace modgraph {

enum class MoveKind { rewire_a, rewire_b, loop_move, flip };

// Deterministic half-edge realization of a cubic multigraph: per vertex the
// slots 3v..3v+2 are consumed in order, loops first (ascending vertex),
// then edges in lexicographic order.
Pairing realize_pairing(const CubicMultigraph& g);

struct PantsMoveOutcome {
  CubicMultigraph result;
  MoveKind kind = MoveKind::rewire_a;
  int site_u = 0;       // move edge endpoints; site_u == site_v marks a loop site
  int site_v = 0;
  int site_copy = 0;    // which parallel copy of the edge
  // the rewiring reproduced the input pairing exactly (loop moves, and the
  // degenerate rewire where the two reconnected slots were already paired)
  bool unchanged = false;
};

// One outcome per loop (a marker that changes nothing) and two per non-loop
// edge copy: variant A regroups slots {a,c} / {b,d}, variant B regroups
// {a,d} / {b,c}, where a<b are the free slots at u and c<d those at v.
// Outcome count = 2 * (non-loop edge count with multiplicity) + loop count.
std::vector<PantsMoveOutcome> pants_move_neighbors(const CubicMultigraph& g);

struct FlipOutcome {
  CombinatorialMap result;
  MoveKind kind = MoveKind::flip;
  int arc_dart = 0;  // smaller dart of the flipped arc, in input labels
};

// Replace the arc {d, alpha(d)} by the opposite diagonal of the two incident
// triangles: (e,p,q),(e',r,s) become (e,s,p),(e',q,r) with alpha unchanged.
// Throws if both darts lie in the same triangle (the arc is unflippable).
CombinatorialMap flip(const CombinatorialMap& m, int arc_dart);

// one flip per arc; 3N/2 outcomes whenever every arc joins two triangles
std::vector<FlipOutcome> flip_neighbors(const CombinatorialMap& m);

}  // namespace modgraph
