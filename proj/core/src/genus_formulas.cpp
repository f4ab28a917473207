// genus_formulas.cpp
#include "modgraph/genus_formulas.hpp"

#include <algorithm>
#include <cmath>

#include "modgraph/errors.hpp"

namespace modgraph {

long long GenusReport::lower_int() const { return std::max<long long>(0, lower.ceil()); }
long long GenusReport::upper_int() const { return upper.floor(); }

GenusReport betti_genus_bounds(long long p, long long q, std::optional<int> girth) {
  if (p < 1) throw DomainError("betti_genus_bounds: p must be >= 1");
  if (q < p - 1) throw DomainError("betti_genus_bounds: q < p-1 means a disconnected graph");
  GenusReport r;
  if (q == p - 1) {
    r.method_notes = "acyclic: both bounds collapse to 0";
    return r;
  }
  if (!girth) throw DomainError("betti_genus_bounds: a graph with q >= p has a cycle");
  const long long h = *girth;
  if (h < 3) throw DomainError("betti_genus_bounds: girth below 3 (bound needs a simple graph)");
  // 1 + (h-2) q / (2h) - p/2
  r.lower = Rational(1) + Rational((h - 2) * q, 2 * h) - Rational(p, 2);
  r.upper = Rational(1 + q - p, 2);
  r.method_notes = "euler bound with girth " + std::to_string(h);
  return r;
}

namespace {
long long ceil_div_nonneg(long long num, long long den) { return (num + den - 1) / den; }
}  // namespace

long long genus_complete(int n) {
  if (n < 3) throw DomainError("genus_complete: n must be >= 3");
  const long long a = n - 3, b = n - 4;
  return ceil_div_nonneg(std::max(0LL, a * b), 12);
}

long long genus_bipartite(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("genus_bipartite: sides must be >= 2");
  const long long a = m - 2, b = n - 2;
  return ceil_div_nonneg(a * b, 4);
}

long long genus_modular_curve(int g) {
  if (g < 2) throw DomainError("genus_modular_curve: g must be >= 2");
  const long long k = g / 2;
  return ceil_div_nonneg(std::max(0LL, (k - 2) * (k - 3)), 12);
}

namespace {
const double kPi = 3.14159265358979323846;
const double kE = 2.71828182845904523536;
}  // namespace

EnvelopeValue envelope(EnvelopeKind kind, long long arg) {
  EnvelopeValue v;
  const double x = static_cast<double>(arg);
  switch (kind) {
    case EnvelopeKind::multigraph_count:
      if (arg < 2 || arg % 2 != 0) throw DomainError("envelope: N must be even and >= 2");
      v.log_value = 2.0 - 0.5 * std::log(kPi * x) + (x / 2.0) * (std::log(3.0 * x / 4.0) - 1.0);
      v.shape = "(e^2/sqrt(pi N)) * (3N/(4e))^(N/2)";
      return v;
    case EnvelopeKind::simple_count:
      if (arg < 2 || arg % 2 != 0) throw DomainError("envelope: N must be even and >= 2");
      v.log_value = -2.0 - 0.5 * std::log(kPi * x) + (x / 2.0) * (std::log(3.0 * x / 4.0) - 1.0);
      v.shape = "(1/(e^2 sqrt(pi N))) * (3N/(4e))^(N/2)";
      return v;
    case EnvelopeKind::one_puncture_matchings:
      if (arg < 2 || arg % 2 != 0) throw DomainError("envelope: N must be even and >= 2");
      v.log_value =
          std::log(2.0 * std::sqrt(2.0) / (3.0 * x)) + (3.0 * x / 2.0) * (std::log(3.0 * x) - 1.0);
      v.shape = "(2 sqrt(2)/(3N)) * (3N/e)^(3N/2)";
      return v;
    case EnvelopeKind::triangulation_count:
      if (arg < 1) throw DomainError("envelope: g must be >= 1");
      v.log_value = std::log(2.0 / (3.0 * std::sqrt(kPi))) - 1.5 * std::log(4.0 * x - 2.0) +
                    (2.0 * x - 1.0) * (std::log(12.0 * x - 6.0) - 1.0);
      v.shape = "(2/(3 sqrt(pi) (4g-2)^(3/2))) * ((12g-6)/e)^(2g-1)";
      return v;
    case EnvelopeKind::pants:
      if (arg < 2) throw DomainError("envelope: pants growth needs g >= 2");
      v.log_value = -0.5 * std::log(2.0 * x - 2.0) + x * (std::log(6.0 * x - 6.0) - std::log(4.0) - 1.0);
      v.shape = "(1/sqrt(2g-2)) * ((6g-6)/(4e))^g";
      v.constants = EnvelopeConstants{1.0 / (3.0 * kE * std::sqrt(kPi)),
                                      kE * kE * kE / std::sqrt(kPi)};
      return v;
    case EnvelopeKind::flip:
      if (arg < 1) throw DomainError("envelope: flip growth needs g >= 1");
      v.log_value = -1.5 * std::log(4.0 * x - 2.0) + 2.0 * x * (std::log(12.0 * x - 6.0) - 1.0);
      v.shape = "(1/(4g-2)^(3/2)) * ((12g-6)/e)^(2g)";
      v.constants = EnvelopeConstants{kE / (18.0 * std::sqrt(kPi)), kE / (6.0 * std::sqrt(kPi))};
      return v;
  }
  throw DomainError("envelope: unknown kind");
}

EnvelopeKind envelope_kind_from_name(const std::string& name) {
  if (name == "pants") return EnvelopeKind::pants;
  if (name == "flip") return EnvelopeKind::flip;
  if (name == "multigraph-count") return EnvelopeKind::multigraph_count;
  if (name == "simple-count") return EnvelopeKind::simple_count;
  if (name == "triangulation-count") return EnvelopeKind::triangulation_count;
  if (name == "one-puncture-matchings") return EnvelopeKind::one_puncture_matchings;
  throw DomainError("envelope: unknown kind '" + name + "'");
}

std::string envelope_kind_name(EnvelopeKind kind) {
  switch (kind) {
    case EnvelopeKind::pants: return "pants";
    case EnvelopeKind::flip: return "flip";
    case EnvelopeKind::multigraph_count: return "multigraph-count";
    case EnvelopeKind::simple_count: return "simple-count";
    case EnvelopeKind::triangulation_count: return "triangulation-count";
    case EnvelopeKind::one_puncture_matchings: return "one-puncture-matchings";
  }
  throw DomainError("envelope: unknown kind");
}

}  // namespace modgraph
