// combinatorial_map.cpp
#include "modgraph/combinatorial_map.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modgraph/config_model.hpp"
#include "modgraph/errors.hpp"

namespace modgraph {

void validate_map(const CombinatorialMap& m) {
  const int n = m.n_triangles;
  if (n < 2 || n % 2 != 0)
    throw StructuralError("map: triangle count must be even and >= 2");
  const int d = 3 * n;
  if (static_cast<int>(m.sigma.size()) != d || static_cast<int>(m.alpha.size()) != d)
    throw StructuralError("map: sigma/alpha must have 3N entries");
  std::vector<char> seen(d, 0);
  for (int i = 0; i < d; ++i) {
    if (m.sigma[i] < 0 || m.sigma[i] >= d) throw StructuralError("map: sigma out of range");
    if (seen[m.sigma[i]]) throw StructuralError("map: sigma not a permutation");
    seen[m.sigma[i]] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (int i = 0; i < d; ++i) {
    if (seen[i]) continue;
    int a = m.sigma[i], b = m.sigma[a];
    if (a == i || b == i || b == a || m.sigma[b] != i)
      throw StructuralError("map: sigma orbit is not a 3-cycle");
    seen[i] = seen[a] = seen[b] = 1;
  }
  for (int i = 0; i < d; ++i) {
    int j = m.alpha[i];
    if (j < 0 || j >= d || j == i || m.alpha[j] != i)
      throw StructuralError("map: alpha is not a fixed-point-free involution");
  }
}

CombinatorialMap map_from_pairing(const Pairing& p) {
  validate_pairing(p);
  CombinatorialMap m;
  m.n_triangles = p.n_vertices;
  const int d = 3 * p.n_vertices;
  m.sigma.resize(d);
  for (int v = 0; v < p.n_vertices; ++v) {
    m.sigma[3 * v] = 3 * v + 1;
    m.sigma[3 * v + 1] = 3 * v + 2;
    m.sigma[3 * v + 2] = 3 * v;
  }
  m.alpha = p.partner;
  return m;
}

Pairing pairing_from_map(const CombinatorialMap& m) {
  validate_map(m);
  for (int t = 0; t < m.n_triangles; ++t)
    if (m.sigma[3 * t] != 3 * t + 1 || m.sigma[3 * t + 1] != 3 * t + 2 ||
        m.sigma[3 * t + 2] != 3 * t)
      throw StructuralError("pairing_from_map: sigma is not in block form");
  Pairing p;
  p.n_vertices = m.n_triangles;
  p.partner = m.alpha;
  validate_pairing(p);
  return p;
}

namespace {

// orbit index per dart, orbits numbered by their smallest dart
std::vector<int> sigma_orbit_index(const CombinatorialMap& m, int* n_orbits_out) {
  const int d = 3 * m.n_triangles;
  std::vector<int> orbit(d, -1);
  int next = 0;
  for (int i = 0; i < d; ++i) {
    if (orbit[i] >= 0) continue;
    int cur = i;
    do {
      orbit[cur] = next;
      cur = m.sigma[cur];
    } while (cur != i);
    ++next;
  }
  if (n_orbits_out) *n_orbits_out = next;
  return orbit;
}

}  // namespace

CubicMultigraph dual_graph(const CombinatorialMap& m) {
  validate_map(m);
  int n_orbits = 0;
  std::vector<int> orbit = sigma_orbit_index(m, &n_orbits);
  CubicMultigraph g(n_orbits);
  for (int i = 0; i < 3 * m.n_triangles; ++i) {
    int j = m.alpha[i];
    if (j < i) continue;
    if (orbit[i] == orbit[j])
      g.add_loop(orbit[i]);
    else
      g.add_edge(orbit[i], orbit[j]);
  }
  return g;
}

namespace {

// Orbits of sigma after alpha, i.e. boundary walks of the glued surface.
int count_punctures(const CombinatorialMap& m) {
  const int d = 3 * m.n_triangles;
  std::vector<char> seen(d, 0);
  int punctures = 0;
  for (int i = 0; i < d; ++i) {
    if (seen[i]) continue;
    ++punctures;
    int cur = i;
    do {
      seen[cur] = 1;
      cur = m.sigma[m.alpha[cur]];
    } while (cur != i);
  }
  return punctures;
}

}  // namespace

SurfaceInvariants surface_invariants(const CombinatorialMap& m) {
  if (!map_is_connected(m))
    throw DomainError("surface_invariants: map is disconnected; genus is per component");
  SurfaceInvariants inv;
  inv.n_triangles = m.n_triangles;
  inv.n_arcs = 3 * m.n_triangles / 2;
  inv.n_punctures = count_punctures(m);
  const int chi = inv.n_punctures - m.n_triangles / 2;  // V - E + F with E-F = N/2
  if (chi > 2 || (2 - chi) % 2 != 0)
    throw std::logic_error("surface_invariants: non-integral genus");
  inv.genus = (2 - chi) / 2;
  return inv;
}

bool map_is_connected(const CombinatorialMap& m) {
  validate_map(m);
  const int d = 3 * m.n_triangles;
  if (d == 0) return true;
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int nxt : {m.sigma[cur], m.alpha[cur]}) {
      if (!seen[nxt]) {
        seen[nxt] = 1;
        ++reached;
        stack.push_back(nxt);
      }
    }
  }
  return reached == d;
}

namespace {

void push_u16(std::string& out, int v) {
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

// Relabel the component containing root by traversal order (sigma first,
// then alpha) and emit the relabeled tables; equal outputs for two roots
// mean an isomorphism maps one root to the other.
std::string root_code(const CombinatorialMap& m, int root, std::vector<int>& label,
                      std::vector<int>& order, int stamp, std::vector<int>& stamps) {
  label[root] = 0;
  stamps[root] = stamp;
  order.clear();
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    int cur = order[i];
    for (int nxt : {m.sigma[cur], m.alpha[cur]}) {
      if (stamps[nxt] != stamp) {
        stamps[nxt] = stamp;
        label[nxt] = static_cast<int>(order.size());
        order.push_back(nxt);
      }
    }
  }
  std::string code;
  code.reserve(4 * order.size());
  for (int cur : order) {
    push_u16(code, label[m.sigma[cur]]);
    push_u16(code, label[m.alpha[cur]]);
  }
  return code;
}

std::vector<std::vector<int>> map_components(const CombinatorialMap& m) {
  const int d = 3 * m.n_triangles;
  std::vector<int> comp(d, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < d; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> members{i};
    comp[i] = static_cast<int>(out.size());
    for (size_t k = 0; k < members.size(); ++k) {
      int cur = members[k];
      for (int nxt : {m.sigma[cur], m.alpha[cur]}) {
        if (comp[nxt] < 0) {
          comp[nxt] = comp[i];
          members.push_back(nxt);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::string canonical_map_code(const CombinatorialMap& m) {
  validate_map(m);
  const int d = 3 * m.n_triangles;
  std::vector<int> label(d, -1), order, stamps(d, -1);
  std::vector<std::string> comp_codes;
  int stamp = 0;
  for (const auto& members : map_components(m)) {
    std::string best;
    for (int root : members) {
      std::string code = root_code(m, root, label, order, stamp++, stamps);
      if (best.empty() || code < best) best = std::move(code);
    }
    std::string framed;
    push_u16(framed, static_cast<int>(members.size()));
    framed += best;
    comp_codes.push_back(std::move(framed));
  }
  std::sort(comp_codes.begin(), comp_codes.end());
  std::string out;
  for (const auto& c : comp_codes) out += c;
  return out;
}

long long map_automorphism_count(const CombinatorialMap& m) {
  validate_map(m);
  if (!map_is_connected(m))
    throw DomainError("map_automorphism_count: map must be connected");
  const int d = 3 * m.n_triangles;
  std::vector<int> label(d, -1), order, stamps(d, -1);
  std::string best;
  long long best_count = 0;
  for (int root = 0; root < d; ++root) {
    std::string code = root_code(m, root, label, order, root, stamps);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_count = 1;
    } else if (code == best) {
      ++best_count;
    }
  }
  return best_count;
}

CombinatorialMap relabel_map(const CombinatorialMap& m, const std::vector<int>& dart_image) {
  validate_map(m);
  const int d = 3 * m.n_triangles;
  if (static_cast<int>(dart_image.size()) != d)
    throw DomainError("relabel_map: image size mismatch");
  std::vector<char> hit(d, 0);
  for (int v : dart_image) {
    if (v < 0 || v >= d || hit[v]) throw DomainError("relabel_map: image is not a bijection");
    hit[v] = 1;
  }
  CombinatorialMap out;
  out.n_triangles = m.n_triangles;
  out.sigma.assign(d, -1);
  out.alpha.assign(d, -1);
  for (int i = 0; i < d; ++i) {
    out.sigma[dart_image[i]] = dart_image[m.sigma[i]];
    out.alpha[dart_image[i]] = dart_image[m.alpha[i]];
  }
  return out;
}

std::vector<std::pair<int, int>> map_arcs(const CombinatorialMap& m) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < 3 * m.n_triangles; ++i)
    if (m.alpha[i] > i) arcs.emplace_back(i, m.alpha[i]);
  return arcs;
}

CombinatorialMap sample_one_puncture(int n_triangles, std::uint64_t seed,
                                     long long max_attempts) {
  if (n_triangles < 2 || n_triangles % 4 != 2)
    throw DomainError("sample_one_puncture: need N == 2 (mod 4), got N = " +
                      std::to_string(n_triangles));
  if (max_attempts < 1) throw DomainError("sample_one_puncture: max_attempts must be >= 1");
  for (long long attempt = 0; attempt < max_attempts; ++attempt) {
    SplitMix64 gen(split_stream(seed, static_cast<std::uint64_t>(attempt)));
    CombinatorialMap m = map_from_pairing(sample_pairing(n_triangles, gen));
    // One boundary walk forces connectivity: every component carries at least one.
    if (count_punctures(m) == 1) return m;
  }
  throw CapabilityError("sample_one_puncture: retry budget of " +
                        std::to_string(max_attempts) + " attempts exhausted");
}

std::string format_map(const CombinatorialMap& m) {
  validate_map(m);
  std::string out = std::to_string(m.n_triangles) + "\n";
  std::vector<char> seen(3 * m.n_triangles, 0);
  for (int i = 0; i < 3 * m.n_triangles; ++i) {
    if (seen[i]) continue;
    int a = m.sigma[i], b = m.sigma[a];
    seen[i] = seen[a] = seen[b] = 1;
    out += std::to_string(i) + " " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  for (auto [a, b] : map_arcs(m)) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

CombinatorialMap parse_map(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line)) throw StructuralError("map text: unexpected end of input");
    return line;
  };
  int n = 0;
  {
    std::istringstream hdr(next_line());
    if (!(hdr >> n)) throw StructuralError("map text: bad triangle count");
    std::string rest;
    if (hdr >> rest) throw StructuralError("map text: trailing tokens after count");
  }
  if (n < 2 || n % 2 != 0) throw StructuralError("map text: N must be even and >= 2");
  CombinatorialMap m;
  m.n_triangles = n;
  m.sigma.assign(3 * n, -1);
  m.alpha.assign(3 * n, -1);
  for (int t = 0; t < n; ++t) {
    std::istringstream row(next_line());
    int a, b, c;
    if (!(row >> a >> b >> c)) throw StructuralError("map text: bad sigma cycle");
    std::string rest;
    if (row >> rest) throw StructuralError("map text: trailing tokens in sigma cycle");
    for (int v : {a, b, c})
      if (v < 0 || v >= 3 * n) throw StructuralError("map text: dart out of range");
    if (m.sigma[a] != -1 || m.sigma[b] != -1 || m.sigma[c] != -1)
      throw StructuralError("map text: repeated dart in sigma cycles");
    m.sigma[a] = b;
    m.sigma[b] = c;
    m.sigma[c] = a;
  }
  for (int e = 0; e < 3 * n / 2; ++e) {
    std::istringstream row(next_line());
    int a, b;
    if (!(row >> a >> b)) throw StructuralError("map text: bad alpha pair");
    std::string rest;
    if (row >> rest) throw StructuralError("map text: trailing tokens in alpha pair");
    if (a < 0 || b < 0 || a >= 3 * n || b >= 3 * n || a == b)
      throw StructuralError("map text: invalid alpha pair");
    if (m.alpha[a] != -1 || m.alpha[b] != -1)
      throw StructuralError("map text: repeated dart in alpha pairs");
    m.alpha[a] = b;
    m.alpha[b] = a;
  }
  std::string rest;
  if (in >> rest) throw StructuralError("map text: trailing content");
  validate_map(m);
  return m;
}

}  // namespace modgraph
