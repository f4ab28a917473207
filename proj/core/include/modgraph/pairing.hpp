// pairing.hpp
// A pairing is a perfect matching on the 3N half-edges of N degree-3 vertices.
// Half-edge h belongs to vertex h/3. N must be even so that 3N is even.
//
// Text format (canonical, byte-exact round trip):
//   line 1: N
//   3N/2 lines "a b" with a < b, sorted by a, '\n' terminated.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "modgraph/errors.hpp"

namespace modgraph {

struct Pairing {
  int n_vertices = 0;          // N
  std::vector<int> partner;    // size 3N, fixed-point-free involution

  int half_edges() const { return 3 * n_vertices; }
};

inline int pairing_vertex(int half_edge) { return half_edge / 3; }

// Builds and validates. Throws StructuralError on anything malformed.
Pairing pairing_from_pairs(int n_vertices, const std::vector<std::pair<int, int>>& pairs);

// Validation used by every entry point that accepts an externally built Pairing.
void validate_pairing(const Pairing& p);

// Canonical sorted pair list (a < b, ascending).
std::vector<std::pair<int, int>> pairing_pairs(const Pairing& p);

std::string format_pairing(const Pairing& p);
Pairing parse_pairing(const std::string& text);

// Visits every perfect matching on 3N half-edges exactly once (smallest free
// half-edge first). The callback receives a reusable buffer; copy if kept.
// (3N-1)!! leaves: 15 at N=2, 10395 at N=4, 34459425 at N=6.
void for_each_pairing(int n_vertices, const std::function<void(const Pairing&)>& fn);

}  // namespace modgraph
