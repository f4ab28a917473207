// pairing.cpp

#include "modgraph/pairing.hpp"

#include <sstream>

namespace modgraph {

void validate_pairing(const Pairing& p) {
  const int n = p.n_vertices;
  if (n <= 0) throw StructuralError("pairing: vertex count must be positive");
  if (n % 2 != 0) throw DomainError("pairing: vertex count must be even");
  const int h = 3 * n;
  if (static_cast<int>(p.partner.size()) != h)
    throw StructuralError("pairing: partner table has wrong size");
  for (int i = 0; i < h; ++i) {
    const int j = p.partner[i];
    if (j < 0 || j >= h) throw StructuralError("pairing: half-edge index out of range");
    if (j == i) throw StructuralError("pairing: half-edge paired with itself");
    if (p.partner[j] != i) throw StructuralError("pairing: partner table is not an involution");
  }
}

Pairing pairing_from_pairs(int n_vertices, const std::vector<std::pair<int, int>>& pairs) {
  if (n_vertices <= 0) throw StructuralError("pairing: vertex count must be positive");
  if (n_vertices % 2 != 0) throw DomainError("pairing: vertex count must be even");
  Pairing p;
  p.n_vertices = n_vertices;
  p.partner.assign(3 * n_vertices, -1);
  const int h = 3 * n_vertices;
  if (static_cast<int>(pairs.size()) != h / 2)
    throw StructuralError("pairing: expected exactly 3N/2 pairs");
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= h || b < 0 || b >= h)
      throw StructuralError("pairing: half-edge index out of range");
    if (a == b) throw StructuralError("pairing: half-edge paired with itself");
    if (p.partner[a] != -1 || p.partner[b] != -1)
      throw StructuralError("pairing: half-edge used twice");
    p.partner[a] = b;
    p.partner[b] = a;
  }
  return p;
}

std::vector<std::pair<int, int>> pairing_pairs(const Pairing& p) {
  std::vector<std::pair<int, int>> out;
  out.reserve(p.half_edges() / 2);
  for (int i = 0; i < p.half_edges(); ++i) {
    if (p.partner[i] > i) out.emplace_back(i, p.partner[i]);
  }
  return out;  // already sorted by first element
}

std::string format_pairing(const Pairing& p) {
  validate_pairing(p);
  std::ostringstream os;
  os << p.n_vertices << "\n";
  for (auto [a, b] : pairing_pairs(p)) os << a << " " << b << "\n";
  return os.str();
}

Pairing parse_pairing(const std::string& text) {
  std::istringstream is(text);
  int n = 0;
  if (!(is >> n)) throw StructuralError("pairing: missing vertex count");
  if (n <= 0 || n > 1000000) throw StructuralError("pairing: vertex count out of range");
  std::vector<std::pair<int, int>> pairs;
  int a, b;
  while (is >> a) {
    if (!(is >> b)) throw StructuralError("pairing: dangling half-edge index");
    pairs.emplace_back(a, b);
  }
  if (!is.eof()) throw StructuralError("pairing: trailing garbage");
  return pairing_from_pairs(n, pairs);
}

namespace {

void pairing_rec(Pairing& p, int from, const std::function<void(const Pairing&)>& fn) {
  const int h = p.half_edges();
  int a = from;
  while (a < h && p.partner[a] != -1) ++a;
  if (a == h) {
    fn(p);
    return;
  }
  for (int b = a + 1; b < h; ++b) {
    if (p.partner[b] != -1) continue;
    p.partner[a] = b;
    p.partner[b] = a;
    pairing_rec(p, a + 1, fn);
    p.partner[a] = -1;
    p.partner[b] = -1;
  }
}

}  // namespace

void for_each_pairing(int n_vertices, const std::function<void(const Pairing&)>& fn) {
  if (n_vertices <= 0 || n_vertices % 2 != 0)
    throw DomainError("for_each_pairing: vertex count must be positive and even");
  Pairing p;
  p.n_vertices = n_vertices;
  p.partner.assign(3 * n_vertices, -1);
  pairing_rec(p, 0, fn);
}

}  // namespace modgraph
