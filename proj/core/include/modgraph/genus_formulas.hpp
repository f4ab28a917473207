// genus_formulas.hpp
// Closed-form genus values, the girth-refined Euler bounds, and log-space
// evaluators for the asymptotic growth envelopes.
#pragma once

#include <optional>
#include <string>

#include "modgraph/rational.hpp"

namespace modgraph {

struct GenusReport {
  Rational lower{0, 1};  // raw rational bounds, kept unrounded
  Rational upper{0, 1};
  std::optional<long long> exact;
  std::string method_notes;

  long long lower_int() const;  // ceil(lower), clamped at 0
  long long upper_int() const;  // floor(upper)
};

// For a connected graph with p vertices, q edges and girth h:
//   1 + (1 - 2/h) q/2 - p/2  <=  genus  <=  (1 + q - p)/2.
// Acyclic inputs (q == p-1) give (0, 0).  The lower bound needs h >= 3,
// i.e. a simple graph; q < p-1 is rejected as disconnected.
GenusReport betti_genus_bounds(long long p, long long q, std::optional<int> girth);

// ceil((n-3)(n-4)/12), the genus of K_n
long long genus_complete(int n);
// ceil((m-2)(n-2)/4), the genus of K_{m,n}
long long genus_bipartite(int m, int n);
// ceil((floor(g/2)-2)(floor(g/2)-3)/12); the curve-type quotient of a genus-g
// surface is complete on floor(g/2)+1 vertices, so this is genus_complete of
// that vertex count (the literal expression is kept for g >= 2)
long long genus_modular_curve(int g);

struct EnvelopeConstants {
  double c1 = 0.0;
  double c2 = 0.0;
};

enum class EnvelopeKind {
  pants,                   // genus of the pants quotient, argument g
  flip,                    // genus of the flip quotient, argument g
  multigraph_count,        // cubic multigraph classes, argument N
  simple_count,            // simple cubic graph classes, argument N
  triangulation_count,     // one-puncture triangulation classes, argument g
  one_puncture_matchings,  // pairings gluing to one puncture, argument N
};

struct EnvelopeValue {
  double log_value = 0.0;  // natural log of the envelope expression
  std::string shape;
  std::optional<EnvelopeConstants> constants;
};

EnvelopeValue envelope(EnvelopeKind kind, long long arg);
EnvelopeKind envelope_kind_from_name(const std::string& name);
std::string envelope_kind_name(EnvelopeKind kind);

}  // namespace modgraph
