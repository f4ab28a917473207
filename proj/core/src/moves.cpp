// moves.cpp
#include "modgraph/moves.hpp"

#include <algorithm>

#include "modgraph/errors.hpp"

namespace modgraph {

Pairing realize_pairing(const CubicMultigraph& g) {
  if (!g.is_cubic()) throw DomainError("realize_pairing: graph must be cubic");
  const int n = g.n_vertices();
  std::vector<int> next_slot(n);
  for (int v = 0; v < n; ++v) next_slot[v] = 3 * v;
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v)
    if (g.loops(v)) {
      pairs.emplace_back(next_slot[v], next_slot[v] + 1);
      next_slot[v] += 2;
    }
  for (int u = 0; u < n; ++u)
    for (auto [v, m] : g.neighbors(u))
      if (v > u)
        for (int c = 0; c < m; ++c) pairs.emplace_back(next_slot[u]++, next_slot[v]++);
  return pairing_from_pairs(n, pairs);
}

namespace {

// the two slots of vertex v other than `used`, ascending
std::pair<int, int> other_slots(int v, int used) {
  int out[2], k = 0;
  for (int s = 3 * v; s < 3 * v + 3; ++s)
    if (s != used) out[k++] = s;
  return {out[0], out[1]};
}

// swap the partners of slots x and y; degenerates to the identity when x
// and y are paired with each other
bool swap_partners(std::vector<int>& partner, int x, int y) {
  if (partner[x] == y) return false;
  int px = partner[x], py = partner[y];
  partner[x] = py;
  partner[py] = x;
  partner[y] = px;
  partner[px] = y;
  return true;
}

}  // namespace

std::vector<PantsMoveOutcome> pants_move_neighbors(const CubicMultigraph& g) {
  if (!g.is_cubic()) throw DomainError("pants_move_neighbors: graph must be cubic");
  if (!g.is_connected()) throw DomainError("pants_move_neighbors: graph must be connected");
  const Pairing base = realize_pairing(g);
  std::vector<PantsMoveOutcome> out;
  std::vector<int> copy_seen(g.n_vertices() * g.n_vertices(), 0);
  for (auto [x, y] : pairing_pairs(base)) {
    const int u = pairing_vertex(x), v = pairing_vertex(y);
    if (u == v) {
      PantsMoveOutcome o;
      o.result = g;
      o.kind = MoveKind::loop_move;
      o.site_u = o.site_v = u;
      o.site_copy = 0;
      o.unchanged = true;
      out.push_back(std::move(o));
      continue;
    }
    const int copy = copy_seen[u * g.n_vertices() + v]++;
    auto [a, b] = other_slots(u, x);
    auto [c, d] = other_slots(v, y);
    for (MoveKind kind : {MoveKind::rewire_a, MoveKind::rewire_b}) {
      Pairing p = base;
      // variant A keeps {a,c} together at u, variant B keeps {a,d}
      const bool changed = (kind == MoveKind::rewire_a) ? swap_partners(p.partner, b, c)
                                                        : swap_partners(p.partner, b, d);
      PantsMoveOutcome o;
      o.result = changed ? CubicMultigraph::from_pairing(p) : g;
      o.kind = kind;
      o.site_u = u;
      o.site_v = v;
      o.site_copy = copy;
      o.unchanged = !changed;
      out.push_back(std::move(o));
    }
  }
  return out;
}

CombinatorialMap flip(const CombinatorialMap& m, int arc_dart) {
  validate_map(m);
  if (arc_dart < 0 || arc_dart >= 3 * m.n_triangles)
    throw DomainError("flip: dart out of range");
  const int e = arc_dart;
  const int e2 = m.alpha[e];
  const int p = m.sigma[e], q = m.sigma[p];
  if (e2 == p || e2 == q)
    throw DomainError("flip: arc lies in a single triangle and cannot be flipped");
  const int r = m.sigma[e2], s = m.sigma[r];
  CombinatorialMap out = m;
  out.sigma[e] = s;
  out.sigma[s] = p;
  out.sigma[p] = e;
  out.sigma[e2] = q;
  out.sigma[q] = r;
  out.sigma[r] = e2;
  return out;
}

std::vector<FlipOutcome> flip_neighbors(const CombinatorialMap& m) {
  std::vector<FlipOutcome> out;
  for (auto [d, d2] : map_arcs(m)) {
    FlipOutcome o;
    o.result = flip(m, d);
    o.arc_dart = d;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace modgraph
