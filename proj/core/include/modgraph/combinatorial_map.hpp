// combinatorial_map.hpp
// Dart-based triangulated surfaces: sigma rotates the three sides of each
// triangle, alpha glues sides in pairs.  Boundary walks are orbits of
// sigma(alpha(d)); the walk count plus the Euler identity gives the genus.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modgraph/multigraph.hpp"
#include "modgraph/pairing.hpp"
#include "modgraph/rng.hpp"

namespace modgraph {

struct CombinatorialMap {
  int n_triangles = 0;     // N; darts are 0..3N-1
  std::vector<int> sigma;  // next dart within the same triangle (N 3-cycles)
  std::vector<int> alpha;  // glued partner dart (fixed-point-free involution)
};

struct SurfaceInvariants {
  int n_triangles = 0;
  int n_arcs = 0;      // 3N/2 glued side pairs
  int n_punctures = 0;
  int genus = 0;
};

// throws StructuralError unless sigma is N disjoint 3-cycles and alpha a
// fixed-point-free involution on 3N darts
void validate_map(const CombinatorialMap& m);

// sigma follows the dart order (3v, 3v+1, 3v+2) at each triangle; alpha
// mirrors the pairing
CombinatorialMap map_from_pairing(const Pairing& p);

// inverse of map_from_pairing; requires sigma in that block form
Pairing pairing_from_map(const CombinatorialMap& m);

// triangle adjacency: one cubic vertex per sigma orbit, an edge per arc
CubicMultigraph dual_graph(const CombinatorialMap& m);

// punctures = orbits of d -> sigma(alpha(d)); genus from
// punctures - 3N/2 + N = 2 - 2g.  Connected maps only (genus of a
// disconnected gluing is per component): DomainError otherwise.
// Non-integral genus cannot happen for a valid connected map and is
// reported as a logic error.
SurfaceInvariants surface_invariants(const CombinatorialMap& m);

bool map_is_connected(const CombinatorialMap& m);

// Code equal iff the maps differ by a dart relabeling (orientation kept).
// Per connected component, the minimum over root darts of the
// traversal-relabeled (sigma, alpha) tables; component codes sorted.
std::string canonical_map_code(const CombinatorialMap& m);

// order of the group of dart bijections commuting with sigma and alpha;
// connected maps only (the group acts freely on darts)
long long map_automorphism_count(const CombinatorialMap& m);

CombinatorialMap relabel_map(const CombinatorialMap& m, const std::vector<int>& dart_image);

// arcs as dart pairs (d, alpha(d)) with d < alpha(d), ascending
std::vector<std::pair<int, int>> map_arcs(const CombinatorialMap& m);

// Rejection-samples uniform pairings until the glued surface has exactly
// one puncture.  Requires N == 2 (mod 4), the only residue where the
// one-puncture surface has integral genus (N = 4g-2).
CombinatorialMap sample_one_puncture(int n_triangles, std::uint64_t seed,
                                     long long max_attempts = 1000000);

// text format: line 1 = N; N sigma cycles "a b c"; 3N/2 alpha pairs "a b"
std::string format_map(const CombinatorialMap& m);
CombinatorialMap parse_map(const std::string& text);

}  // namespace modgraph
