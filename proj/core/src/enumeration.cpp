// enumeration.cpp
#include "modgraph/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "modgraph/errors.hpp"
#include "modgraph/pairing.hpp"

namespace modgraph {

GraphFilter graph_filter_from_name(const std::string& name) {
  if (name == "all") return GraphFilter::all;
  if (name == "connected") return GraphFilter::connected;
  if (name == "simple") return GraphFilter::simple;
  if (name == "simple-connected") return GraphFilter::simple_connected;
  throw DomainError("unknown filter '" + name + "'");
}

std::string graph_filter_name(GraphFilter f) {
  switch (f) {
    case GraphFilter::all: return "all";
    case GraphFilter::connected: return "connected";
    case GraphFilter::simple: return "simple";
    case GraphFilter::simple_connected: return "simple-connected";
  }
  throw DomainError("unknown filter");
}

namespace {

void require_scan_size(int n, const char* who) {
  if (n < 2 || n % 2 != 0) throw DomainError(std::string(who) + ": N must be even and >= 2");
  if (n > 6)
    throw CapabilityError(std::string(who) + ": matching scan capped at N = 6, got N = " +
                          std::to_string(n));
}

bool graph_is_simple(const CubicMultigraph& g) {
  for (int v = 0; v < g.n_vertices(); ++v) {
    if (g.loops(v)) return false;
    for (auto [w, m] : g.neighbors(v))
      if (m > 1) return false;
  }
  return true;
}

// Packed vertex-labeled adjacency: 2 bits per unordered vertex pair, then
// one loop bit per vertex.  Fits 64 bits for N <= 6.
std::uint64_t labeled_key(const Pairing& p, int n) {
  std::uint64_t key = 0;
  const int pair_bits = n * (n - 1);  // 2 bits per pair
  for (int h = 0; h < 3 * n; ++h) {
    const int t = p.partner[h];
    if (t < h) continue;
    const int u = h / 3, v = t / 3;
    if (u == v) {
      key |= 1ULL << (pair_bits + u);
    } else {
      const int pi = u * (2 * n - u - 1) / 2 + (v - u - 1);
      key += 1ULL << (2 * pi);
    }
  }
  return key;
}

CubicMultigraph decode_labeled_key(std::uint64_t key, int n) {
  CubicMultigraph g(n);
  const int pair_bits = n * (n - 1);
  for (int u = 0; u < n; ++u) {
    if ((key >> (pair_bits + u)) & 1ULL) g.add_loop(u);
    for (int v = u + 1; v < n; ++v) {
      const int pi = u * (2 * n - u - 1) / 2 + (v - u - 1);
      const int m = static_cast<int>((key >> (2 * pi)) & 3ULL);
      for (int c = 0; c < m; ++c) g.add_edge(u, v);
    }
  }
  return g;
}

std::map<std::uint64_t, long long> labeled_scan(int n) {
  std::unordered_map<std::uint64_t, long long> counts;
  for_each_pairing(n, [&](const Pairing& p) { counts[labeled_key(p, n)] += 1; });
  return {counts.begin(), counts.end()};
}

struct ClassInfo {
  bool connected = false;
  bool simple = false;
};

EnumerationResult assemble_result(int n, const std::map<std::string, ClassInfo>& classes,
                                  GraphFilter filter, const std::string& method) {
  EnumerationResult r;
  r.n_vertices = n;
  r.method = method;
  for (const auto& [code, info] : classes) {
    r.counts.total += 1;
    if (info.connected) r.counts.connected += 1;
    if (info.simple) r.counts.simple += 1;
    if (info.simple && info.connected) r.counts.simple_connected += 1;
    const bool keep = (filter == GraphFilter::all) ||
                      (filter == GraphFilter::connected && info.connected) ||
                      (filter == GraphFilter::simple && info.simple) ||
                      (filter == GraphFilter::simple_connected && info.simple && info.connected);
    if (keep) r.class_codes.push_back(code);
  }
  return r;
}

}  // namespace

EnumerationResult brute_force_classes(int n_vertices, GraphFilter filter) {
  require_scan_size(n_vertices, "brute_force_classes");
  std::map<std::string, ClassInfo> classes;
  for (const auto& [key, count] : labeled_scan(n_vertices)) {
    CubicMultigraph g = decode_labeled_key(key, n_vertices);
    auto [it, fresh] = classes.try_emplace(g.canonical_code());
    if (fresh) {
      it->second.connected = g.is_connected();
      it->second.simple = graph_is_simple(g);
    }
  }
  return assemble_result(n_vertices, classes, filter, "brute");
}

std::vector<LabeledFiber> brute_force_labeled_fibers(int n_vertices) {
  require_scan_size(n_vertices, "brute_force_labeled_fibers");
  std::vector<LabeledFiber> out;
  for (const auto& [key, count] : labeled_scan(n_vertices))
    out.push_back({decode_labeled_key(key, n_vertices), count});
  return out;
}

namespace {

CubicMultigraph widen(const CubicMultigraph& g) {
  CubicMultigraph out(g.n_vertices() + 1);
  for (int v = 0; v < g.n_vertices(); ++v) {
    if (g.loops(v)) out.add_loop(v);
    for (auto [w, m] : g.neighbors(v))
      if (w > v)
        for (int c = 0; c < m; ++c) out.add_edge(v, w);
  }
  return out;
}

// Connected classes for every even size up to n_max, via one breadth-first
// sweep over connected partial shapes.  A shape is a connected multigraph
// with degrees <= 3; one edge unit (edge copy or loop) is added per level
// and always touches the existing component, so partials stay connected.
// Dedup is by canonical code; cubic shapes are terminal and get collected.
std::map<int, std::vector<CubicMultigraph>> connected_classes_up_to(int n_max) {
  std::map<int, std::vector<CubicMultigraph>> done;
  for (int m = 2; m <= n_max; m += 2) done[m] = {};

  std::map<std::string, CubicMultigraph> frontier;
  {
    CubicMultigraph edge2(2);
    edge2.add_edge(0, 1);
    CubicMultigraph loop1(1);
    loop1.add_loop(0);
    frontier.emplace(edge2.canonical_code(), std::move(edge2));
    frontier.emplace(loop1.canonical_code(), std::move(loop1));
  }
  const int max_units = 3 * n_max / 2;
  for (int level = 1; level <= max_units; ++level) {
    // pull out finished cubic shapes
    for (auto it = frontier.begin(); it != frontier.end();) {
      const CubicMultigraph& g = it->second;
      if (g.is_cubic()) {
        if (g.n_vertices() % 2 == 0 && g.n_vertices() <= n_max)
          done[g.n_vertices()].push_back(g);
        it = frontier.erase(it);
      } else {
        ++it;
      }
    }
    if (level == max_units || frontier.empty()) break;

    std::map<std::string, CubicMultigraph> next;
    auto offer = [&](CubicMultigraph&& g) {
      std::string code = g.canonical_code();
      next.try_emplace(std::move(code), std::move(g));
    };
    for (const auto& [code, g] : frontier) {
      const int active = g.n_vertices();
      for (int v = 0; v < active; ++v) {
        if (g.degree(v) <= 1) {
          CubicMultigraph h = g;
          h.add_loop(v);
          offer(std::move(h));
        }
        if (g.degree(v) > 2) continue;
        for (int w = v + 1; w < active; ++w) {
          if (g.degree(w) > 2 || g.multiplicity(v, w) >= 3) continue;
          CubicMultigraph h = g;
          h.add_edge(v, w);
          offer(std::move(h));
        }
        if (active < n_max) {
          CubicMultigraph h = widen(g);
          h.add_edge(v, active);
          offer(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return done;
}

}  // namespace

std::vector<CubicMultigraph> connected_class_reps(int n_vertices) {
  if (n_vertices < 2 || n_vertices % 2 != 0)
    throw DomainError("connected_class_reps: N must be even and >= 2");
  if (n_vertices > 14)
    throw CapabilityError("connected_class_reps: capped at N = 14, got N = " +
                          std::to_string(n_vertices));
  auto all = connected_classes_up_to(n_vertices);
  auto& reps = all[n_vertices];
  std::sort(reps.begin(), reps.end(), [](const CubicMultigraph& a, const CubicMultigraph& b) {
    return a.canonical_code() < b.canonical_code();
  });
  return reps;
}

EnumerationResult enumerate_cubic_multigraphs(int n_vertices, GraphFilter filter) {
  if (n_vertices < 2 || n_vertices % 2 != 0)
    throw DomainError("enumerate_cubic_multigraphs: N must be even and >= 2");
  if (n_vertices > 14)
    throw CapabilityError("enumerate_cubic_multigraphs: capped at N = 14, got N = " +
                          std::to_string(n_vertices));
  auto connected = connected_classes_up_to(n_vertices);

  std::map<std::string, ClassInfo> classes;
  for (const auto& g : connected[n_vertices])
    classes[g.canonical_code()] = {true, graph_is_simple(g)};

  // disconnected classes are multisets of >= 2 connected components;
  // components chosen in nonincreasing size, ties by nondecreasing index
  std::vector<const CubicMultigraph*> chosen;
  std::function<void(int, size_t, int)> pick = [&](int max_size, size_t min_index, int remaining) {
    if (remaining == 0) {
      if (chosen.size() < 2) return;
      CubicMultigraph u = *chosen[0];
      for (size_t i = 1; i < chosen.size(); ++i) u = disjoint_union(u, *chosen[i]);
      classes[u.canonical_code()] = {false, graph_is_simple(u)};
      return;
    }
    for (int s = std::min(max_size, remaining); s >= 2; s -= 2) {
      const auto& reps = connected[s];
      const size_t start = (s == max_size) ? min_index : 0;
      for (size_t i = start; i < reps.size(); ++i) {
        chosen.push_back(&reps[i]);
        pick(s, i, remaining - s);
        chosen.pop_back();
      }
    }
  };
  pick(n_vertices, 0, n_vertices);

  return assemble_result(n_vertices, classes, filter, "orderly");
}

long long count_one_puncture_pairings(int n_vertices) {
  require_scan_size(n_vertices, "count_one_puncture_pairings");
  const int darts = 3 * n_vertices;
  long long count = 0;
  for_each_pairing(n_vertices, [&](const Pairing& p) {
    // single boundary walk iff the orbit of dart 0 under
    // d -> rotate(partner(d)) covers all darts
    int cur = 0, len = 0;
    do {
      const int t = p.partner[cur];
      cur = t - t % 3 + (t + 1) % 3;
      ++len;
    } while (cur != 0);
    if (len == darts) ++count;
  });
  return count;
}

namespace {

// Walk coordinates for a one-puncture map in block-sigma form: relabel darts
// along the boundary walk, then the pairing becomes an involution beta on
// Z_L with the walk acting as i -> i+1.  Canonical form: minimum of beta
// over the L rotations.  The number of rotations attaining the minimum is
// the stabilizer size, i.e. the map automorphism count.
std::vector<int> rotation_canonical(const std::vector<int>& beta, long long* aut_out) {
  const int L = static_cast<int>(beta.size());
  std::vector<int> best, rot(L);
  long long hits = 0;
  for (int r = 0; r < L; ++r) {
    for (int i = 0; i < L; ++i) rot[i] = (beta[(i + r) % L] - r + L) % L;
    if (best.empty() || rot < best) {
      best = rot;
      hits = 1;
    } else if (rot == best) {
      ++hits;
    }
  }
  if (aut_out) *aut_out = hits;
  return best;
}

std::vector<int> walk_beta(const Pairing& p) {
  const int L = 3 * p.n_vertices;
  std::vector<int> order(L), pos(L);
  int cur = 0;
  for (int i = 0; i < L; ++i) {
    order[i] = cur;
    pos[cur] = i;
    const int t = p.partner[cur];
    cur = t - t % 3 + (t + 1) % 3;
  }
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = pos[p.partner[order[i]]];
  return beta;
}

CombinatorialMap map_from_beta(const std::vector<int>& beta) {
  const int L = static_cast<int>(beta.size());
  CombinatorialMap m;
  m.n_triangles = L / 3;
  m.alpha = beta;
  m.sigma.resize(L);
  for (int i = 0; i < L; ++i) m.sigma[i] = (beta[i] + 1) % L;
  validate_map(m);
  return m;
}

}  // namespace

EnumerationResult brute_force_one_puncture_classes(int n_vertices) {
  require_scan_size(n_vertices, "brute_force_one_puncture_classes");
  const int darts = 3 * n_vertices;
  std::set<std::vector<int>> seen;
  for_each_pairing(n_vertices, [&](const Pairing& p) {
    int cur = 0, len = 0;
    do {
      const int t = p.partner[cur];
      cur = t - t % 3 + (t + 1) % 3;
      ++len;
    } while (cur != 0);
    if (len != darts) return;
    seen.insert(rotation_canonical(walk_beta(p), nullptr));
  });
  std::map<std::string, ClassInfo> classes;
  for (const auto& beta : seen) {
    CombinatorialMap m = map_from_beta(beta);
    classes[canonical_map_code(m)] = {true, graph_is_simple(dual_graph(m))};
  }
  EnumerationResult r = assemble_result(n_vertices, classes, GraphFilter::all, "brute");
  if (r.counts.total != static_cast<long long>(seen.size()))
    throw std::logic_error("one-puncture dedup mismatch between rotation and map codes");
  return r;
}

namespace {

// Backtracking over chord diagrams: pair the smallest unassigned dart with
// every larger free dart, pruning whenever a sigma chain cannot close as a
// 3-cycle.  The visitor returns false to stop the search.
void chord_search(int g, const char* who,
                  const std::function<bool(const std::vector<int>&)>& visit) {
  if (g < 1) throw DomainError(std::string(who) + ": g must be >= 1");
  const int n = 4 * g - 2;
  if (n > 10)
    throw CapabilityError(std::string(who) + ": capped at 4g-2 <= 10 triangles, got " +
                          std::to_string(n));
  const int L = 3 * n;

  std::vector<int> beta(L, -1);
  auto sigma_of = [&](int d) -> int { return beta[d] < 0 ? -1 : (beta[d] + 1) % L; };
  auto pred_of = [&](int d) -> int {
    const int e = (d - 1 + L) % L;
    return beta[e] < 0 ? -1 : beta[e];
  };
  // the sigma chain through x must close as a 3-cycle: reject closed cycles
  // of any other length and open chains already longer than 2 steps
  auto chain_ok = [&](int x) -> bool {
    int fwd = 0, cur = x;
    while (fwd < 4) {
      const int nxt = sigma_of(cur);
      if (nxt < 0) break;
      ++fwd;
      cur = nxt;
      if (cur == x) return fwd == 3;
    }
    if (fwd >= 3) return false;
    int bwd = 0;
    cur = x;
    while (bwd < 4) {
      const int prv = pred_of(cur);
      if (prv < 0) break;
      ++bwd;
      cur = prv;
    }
    return fwd + bwd <= 2;
  };

  bool stopped = false;
  std::function<void(int)> rec = [&](int from) {
    if (stopped) return;
    int a = from;
    while (a < L && beta[a] >= 0) ++a;
    if (a == L) {
      if (!visit(beta)) stopped = true;
      return;
    }
    for (int b = a + 1; b < L && !stopped; ++b) {
      if (beta[b] >= 0) continue;
      beta[a] = b;
      beta[b] = a;
      if (chain_ok(a) && chain_ok(b)) rec(a + 1);
      beta[a] = beta[b] = -1;
    }
  };
  rec(0);
}

}  // namespace

std::vector<TriangulationClass> one_vertex_triangulation_classes(int g) {
  std::map<std::vector<int>, long long> canon;  // canonical beta -> aut
  chord_search(g, "one_vertex_triangulation_classes", [&](const std::vector<int>& beta) {
    long long aut = 0;
    canon.emplace(rotation_canonical(beta, &aut), aut);
    return true;
  });
  std::vector<TriangulationClass> out;
  for (const auto& [b, aut] : canon) out.push_back({map_from_beta(b), aut});
  return out;
}

CombinatorialMap first_one_vertex_triangulation(int g) {
  std::vector<int> found;
  chord_search(g, "first_one_vertex_triangulation", [&](const std::vector<int>& beta) {
    found = beta;
    return false;
  });
  if (found.empty()) throw std::logic_error("chord search found no triangulation");
  return map_from_beta(found);
}

EnumerationResult enumerate_one_vertex_triangulations(int g) {
  auto classes = one_vertex_triangulation_classes(g);
  std::map<std::string, ClassInfo> infos;
  for (const auto& c : classes)
    infos[canonical_map_code(c.rep)] = {true, graph_is_simple(dual_graph(c.rep))};
  EnumerationResult r = assemble_result(4 * g - 2, infos, GraphFilter::all, "orderly");
  if (r.counts.total != static_cast<long long>(classes.size()))
    throw std::logic_error("triangulation dedup mismatch between rotation and map codes");
  r.method = "orderly";
  return r;
}

}  // namespace modgraph
