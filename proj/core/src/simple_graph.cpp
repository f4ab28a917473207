// simple_graph.cpp
#include "modgraph/simple_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "modgraph/errors.hpp"

namespace modgraph {

SimpleGraph simple_graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw DomainError("simple graph needs at least one vertex");
  SimpleGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw StructuralError("edge endpoint out of range");
    if (u == v) throw StructuralError("simple graph cannot carry loops");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw StructuralError("duplicate edge in simple graph");
  }
  return g;
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw DomainError("complete_graph: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return simple_graph_from_edges(n, edges);
}

SimpleGraph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("complete_bipartite: sides must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return simple_graph_from_edges(m + n, edges);
}

SimpleGraph simple_quotient(const CubicMultigraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.n_vertices(); ++v)
    for (auto [w, m] : g.neighbors(v))
      if (w > v) edges.emplace_back(v, w);
  return simple_graph_from_edges(std::max(1, g.n_vertices()), edges);
}

long long simple_edge_count(const SimpleGraph& g) {
  long long s = 0;
  for (const auto& row : g.adj) s += static_cast<long long>(row.size());
  return s / 2;
}

bool simple_is_connected(const SimpleGraph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n;
}

std::optional<int> simple_girth(const SimpleGraph& g) {
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n);
  for (int root = 0; root < g.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (best >= 0 && 2 * dist[v] >= best) break;
      for (int w : g.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v]) {
          // non-tree edge closes a cycle through the BFS tree
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::string format_simple_graph(const SimpleGraph& g) {
  std::string out = std::to_string(g.n) + "\n";
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (v > u) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

SimpleGraph parse_simple_graph(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw StructuralError("simple graph text: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u) {
    if (!(in >> v)) throw StructuralError("simple graph text: dangling edge endpoint");
    edges.emplace_back(u, v);
  }
  if (!in.eof()) {
    in.clear();
    std::string tail;
    in >> tail;
    if (!tail.empty()) throw StructuralError("simple graph text: trailing token '" + tail + "'");
  }
  return simple_graph_from_edges(n, edges);
}

}  // namespace modgraph
