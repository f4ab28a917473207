// genus_search.cpp
#include "modgraph/genus_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "modgraph/bigint.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/genus_formulas.hpp"

namespace modgraph {

namespace {

struct GenusSearch {
  const SimpleGraph& g;
  int n_darts = 0;
  std::vector<int> twin;          // opposite dart of the same edge
  std::vector<int> owner;         // vertex a dart leaves from
  std::vector<std::vector<int>> vertex_darts;
  std::vector<int> rot_next;      // successor in the rotation at owner(d)
  std::vector<int> face_stamp;
  int stamp = 0;
  long long best = 0;
  long long lower = 0;
  int first_branching = -1;       // vertex where the mirror quotient applies

  explicit GenusSearch(const SimpleGraph& graph) : g(graph) {}

  long long trace_genus() {
    ++stamp;
    int faces = 0;
    for (int d = 0; d < n_darts; ++d) {
      if (face_stamp[d] == stamp) continue;
      ++faces;
      int cur = d;
      do {
        face_stamp[cur] = stamp;
        cur = rot_next[twin[cur]];
      } while (cur != d);
    }
    const long long chi = g.n - n_darts / 2 + faces;
    if ((2 - chi) % 2 != 0) throw std::logic_error("genus search: odd euler characteristic");
    return (2 - chi) / 2;
  }

  // assign rotations for vertices v.. and keep the best leaf genus
  bool assign(int v) {
    if (v == g.n) {
      best = std::min(best, trace_genus());
      return best > lower;  // false stops the search
    }
    auto& darts = vertex_darts[v];
    const int k = static_cast<int>(darts.size());
    if (k <= 2) {
      if (k == 1) rot_next[darts[0]] = darts[0];
      if (k == 2) {
        rot_next[darts[0]] = darts[1];
        rot_next[darts[1]] = darts[0];
      }
      return assign(v + 1);
    }
    // first dart pinned: permutations of the suffix enumerate cyclic orders
    std::vector<int> suffix(darts.begin() + 1, darts.end());
    std::sort(suffix.begin(), suffix.end());
    do {
      if (v == first_branching) {
        // reversal of the cyclic order with the pinned dart kept first
        bool keep = true;
        for (size_t i = 0; i < suffix.size(); ++i) {
          int a = suffix[i], b = suffix[suffix.size() - 1 - i];
          if (a != b) {
            keep = a < b;
            break;
          }
        }
        if (!keep) continue;
      }
      rot_next[darts[0]] = suffix[0];
      for (size_t i = 0; i + 1 < suffix.size(); ++i) rot_next[suffix[i]] = suffix[i + 1];
      rot_next[suffix.back()] = darts[0];
      if (!assign(v + 1)) return false;
    } while (std::next_permutation(suffix.begin(), suffix.end()));
    return true;
  }
};

}  // namespace

long long exact_graph_genus(const SimpleGraph& g, long long dart_budget) {
  if (g.n < 1) throw DomainError("exact_graph_genus: empty graph");
  if (!simple_is_connected(g)) throw DomainError("exact_graph_genus: graph must be connected");
  const long long q = simple_edge_count(g);
  if (q == 0) return 0;
  auto h = simple_girth(g);
  if (!h) return 0;  // connected and acyclic: a tree embeds in the sphere

  BigInt space = 1;
  for (const auto& row : g.adj)
    if (row.size() >= 2) space *= big_factorial(static_cast<int>(row.size()) - 1);
  if (space > dart_budget)
    throw CapabilityError("exact_graph_genus: rotation space " + space.str() +
                          " exceeds budget " + std::to_string(dart_budget));

  GenusSearch s(g);
  s.n_darts = static_cast<int>(2 * q);
  s.twin.resize(s.n_darts);
  s.owner.resize(s.n_darts);
  s.vertex_darts.assign(g.n, {});
  int next_dart = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (v > u) {
        s.twin[next_dart] = next_dart + 1;
        s.twin[next_dart + 1] = next_dart;
        s.owner[next_dart] = u;
        s.owner[next_dart + 1] = v;
        s.vertex_darts[u].push_back(next_dart);
        s.vertex_darts[v].push_back(next_dart + 1);
        next_dart += 2;
      }
  s.rot_next.assign(s.n_darts, -1);
  s.face_stamp.assign(s.n_darts, 0);
  for (int v = 0; v < g.n; ++v)
    if (s.vertex_darts[v].size() >= 3) {
      s.first_branching = v;
      break;
    }
  s.lower = betti_genus_bounds(g.n, q, h).lower_int();
  s.best = (1 + q - g.n) / 2 + 1;  // above any achievable genus
  s.assign(0);
  return s.best;
}

}  // namespace modgraph
