// multigraph.cpp

#include "modgraph/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <sstream>

namespace modgraph {

CubicMultigraph::CubicMultigraph(int n_vertices) : n_(n_vertices), adj_(n_vertices) {
  if (n_vertices < 0) throw DomainError("multigraph: negative vertex count");
}

CubicMultigraph::CubicMultigraph(const CubicMultigraph& o) : n_(o.n_), adj_(o.adj_) {
  const std::string* c = o.code_cache_.load(std::memory_order_acquire);
  if (c) code_cache_.store(new std::string(*c), std::memory_order_release);
}

CubicMultigraph::CubicMultigraph(CubicMultigraph&& o) noexcept
    : n_(o.n_), adj_(std::move(o.adj_)) {
  code_cache_.store(o.code_cache_.exchange(nullptr), std::memory_order_acq_rel);
  o.n_ = 0;
}

CubicMultigraph& CubicMultigraph::operator=(const CubicMultigraph& o) {
  if (this == &o) return *this;
  n_ = o.n_;
  adj_ = o.adj_;
  delete code_cache_.exchange(nullptr);
  const std::string* c = o.code_cache_.load(std::memory_order_acquire);
  if (c) code_cache_.store(new std::string(*c), std::memory_order_release);
  return *this;
}

CubicMultigraph& CubicMultigraph::operator=(CubicMultigraph&& o) noexcept {
  if (this == &o) return *this;
  n_ = o.n_;
  adj_ = std::move(o.adj_);
  delete code_cache_.exchange(o.code_cache_.exchange(nullptr));
  o.n_ = 0;
  return *this;
}

CubicMultigraph::~CubicMultigraph() { delete code_cache_.load(std::memory_order_acquire); }

int CubicMultigraph::multiplicity(int u, int v) const {
  const VertexAdj& a = adj_[u];
  for (int i = 0; i < a.cnt; ++i)
    if (a.nbr[i] == v) return a.mult[i];
  return 0;
}

int CubicMultigraph::loops(int v) const { return adj_[v].loop; }

int CubicMultigraph::degree(int v) const {
  const VertexAdj& a = adj_[v];
  int d = 2 * a.loop;
  for (int i = 0; i < a.cnt; ++i) d += a.mult[i];
  return d;
}

bool CubicMultigraph::is_cubic() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return n_ > 0;
}

int CubicMultigraph::edge_count() const {
  int e = 0;
  for (int v = 0; v < n_; ++v) {
    const VertexAdj& a = adj_[v];
    e += a.loop;
    for (int i = 0; i < a.cnt; ++i)
      if (a.nbr[i] > v) e += a.mult[i];
  }
  return e;
}

std::vector<std::pair<int, int>> CubicMultigraph::neighbors(int v) const {
  const VertexAdj& a = adj_[v];
  std::vector<std::pair<int, int>> out;
  out.reserve(a.cnt);
  for (int i = 0; i < a.cnt; ++i) out.emplace_back(a.nbr[i], a.mult[i]);
  std::sort(out.begin(), out.end());
  return out;
}

void CubicMultigraph::bump(int u, int v) {
  VertexAdj& a = adj_[u];
  for (int i = 0; i < a.cnt; ++i) {
    if (a.nbr[i] == v) {
      ++a.mult[i];
      return;
    }
  }
  if (a.cnt == 3) throw DomainError("multigraph: more than 3 distinct neighbors");
  a.nbr[a.cnt] = v;
  a.mult[a.cnt] = 1;
  ++a.cnt;
}

void CubicMultigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("multigraph: vertex out of range");
  if (u == v) {
    add_loop(u);
    return;
  }
  if (degree(u) >= 3 || degree(v) >= 3) throw DomainError("multigraph: degree cap exceeded");
  bump(u, v);
  bump(v, u);
  delete code_cache_.exchange(nullptr);
}

void CubicMultigraph::add_loop(int v) {
  if (v < 0 || v >= n_) throw DomainError("multigraph: vertex out of range");
  if (adj_[v].loop) throw DomainError("multigraph: loop cap exceeded");
  if (degree(v) + 2 > 3) throw DomainError("multigraph: degree cap exceeded");
  adj_[v].loop = 1;
  delete code_cache_.exchange(nullptr);
}

CubicMultigraph CubicMultigraph::from_pairing(const Pairing& p) {
  validate_pairing(p);
  CubicMultigraph g(p.n_vertices);
  for (int h = 0; h < p.half_edges(); ++h) {
    const int j = p.partner[h];
    if (j < h) continue;
    const int u = pairing_vertex(h), v = pairing_vertex(j);
    if (u == v)
      g.add_loop(u);
    else
      g.add_edge(u, v);
  }
  return g;  // degree 3 at every vertex by construction
}

CubicMultigraph CubicMultigraph::from_edge_list(int n_vertices,
                                                const std::vector<std::tuple<int, int, int>>& edges,
                                                const std::vector<int>& loop_vertices) {
  CubicMultigraph g(n_vertices);
  for (auto [u, v, m] : edges) {
    if (m < 1) throw StructuralError("multigraph: multiplicity must be >= 1");
    for (int i = 0; i < m; ++i) g.add_edge(u, v);
  }
  for (int v : loop_vertices) g.add_loop(v);
  return g;
}

bool CubicMultigraph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const VertexAdj& a = adj_[v];
    for (int i = 0; i < a.cnt; ++i) {
      const int w = a.nbr[i];
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n_;
}

bool CubicMultigraph::operator==(const CubicMultigraph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v) {
    if (loops(v) != o.loops(v)) return false;
    if (neighbors(v) != o.neighbors(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// color refinement (isomorphism-invariant, used by canonicalization and Aut)

namespace {

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return (h * 0x100000001b3ull) ^ (x ^ (x >> 31));
}

}  // namespace

// Fixpoint of hashed 1-WL rounds. Values are pure functions of the seed colors
// and the structure, so two runs seeded consistently stay comparable vertexwise.
// A hash collision can only coarsen the partition, never break invariance.
std::vector<std::uint64_t> CubicMultigraph::refine64(std::vector<std::uint64_t> color) const {
  const int n = n_;
  std::vector<std::uint64_t> next(n);
  std::size_t n_colors = 0;
  for (;;) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t h = mix64(0x5851f42d4c957f2dull, color[v]);
      h = mix64(h, adj_[v].loop);
      std::array<std::uint64_t, 3> nb{};
      const int c = adj_[v].cnt;
      for (int i = 0; i < c; ++i)
        nb[i] = mix64(color[adj_[v].nbr[i]], adj_[v].mult[i]);
      std::sort(nb.begin(), nb.begin() + c);
      for (int i = 0; i < c; ++i) h = mix64(h, nb[i]);
      next[v] = h;
    }
    color.swap(next);
    std::vector<std::uint64_t> distinct = color;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() == n_colors || distinct.size() == static_cast<std::size_t>(n))
      return color;
    n_colors = distinct.size();
  }
}

std::vector<int> CubicMultigraph::refined_colors() const {
  std::vector<std::uint64_t> c = refine64(std::vector<std::uint64_t>(n_, 0));
  std::vector<std::uint64_t> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> color(n_);
  for (int v = 0; v < n_; ++v)
    color[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), c[v]) - sorted.begin());
  return color;
}

// ---------------------------------------------------------------------------
// canonical code: maximize row-major byte string over admissible orderings

namespace {
inline void push_u16(std::vector<uint8_t>& v, int x) {
  v.push_back(static_cast<uint8_t>((x >> 8) & 0xff));
  v.push_back(static_cast<uint8_t>(x & 0xff));
}
}  // namespace

struct CanonSearch {
  const CubicMultigraph& g;
  int n;
  std::vector<int> color;
  std::vector<int> order;
  std::vector<char> used;
  std::vector<uint8_t> code;
  std::vector<uint8_t> best;
  std::vector<int> best_order;
  bool have_best = false;

  explicit CanonSearch(const CubicMultigraph& graph)
      : g(graph), n(graph.n_vertices()), color(graph.refined_colors()), used(n, 0) {}

  std::vector<uint8_t> row_for(int v, int depth) const {
    std::vector<uint8_t> row;
    row.reserve(3 + depth);
    push_u16(row, color[v]);
    row.push_back(static_cast<uint8_t>(g.loops(v)));
    for (int i = 0; i < depth; ++i)
      row.push_back(static_cast<uint8_t>(g.multiplicity(v, order[i])));
    return row;
  }

  void dfs(int depth) {
    if (depth == n) {
      if (!have_best || code > best) {
        best = code;
        best_order = order;
        have_best = true;
      }
      return;
    }
    // rows for unused candidates; only arg-max rows can reach the maximum
    std::vector<uint8_t> max_row;
    std::vector<int> cands;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::vector<uint8_t> row = row_for(v, depth);
      if (cands.empty() || row > max_row) {
        max_row = std::move(row);
        cands.assign(1, v);
      } else if (row == max_row) {
        cands.push_back(v);
      }
    }
    const size_t pos = code.size();
    code.insert(code.end(), max_row.begin(), max_row.end());
    // prune against the current best prefix
    bool viable = true;
    if (have_best) {
      const int c = std::memcmp(code.data(), best.data(), code.size());
      if (c < 0) viable = false;
    }
    if (viable) {
      for (int v : cands) {
        used[v] = 1;
        order.push_back(v);
        dfs(depth + 1);
        order.pop_back();
        used[v] = 0;
        // after a best update the shared prefix still matches by construction;
        // sibling rows were equal, so re-entry stays correct
      }
    }
    code.resize(pos);
  }

  void run() {
    code.clear();
    push_u16(code, n);
    dfs(0);
  }
};

const std::string& CubicMultigraph::canonical_code() const {
  const std::string* cached = code_cache_.load(std::memory_order_acquire);
  if (cached) return *cached;
  CanonSearch s(*this);
  s.run();
  auto* fresh =
      new std::string(reinterpret_cast<const char*>(s.best.data()), s.best.size());
  const std::string* expected = nullptr;
  if (!code_cache_.compare_exchange_strong(expected, fresh, std::memory_order_acq_rel)) {
    delete fresh;  // a concurrent computation won; results are identical
    return *expected;
  }
  return *fresh;
}

CubicMultigraph CubicMultigraph::canonical_form() const {
  CanonSearch s(*this);
  s.run();
  std::vector<int> new_label(n_);
  for (int pos = 0; pos < n_; ++pos) new_label[s.best_order[pos]] = pos;
  CubicMultigraph out(n_);
  for (int v = 0; v < n_; ++v) {
    for (int i = 0; i < adj_[v].cnt; ++i) {
      const int w = adj_[v].nbr[i];
      if (w < v) continue;
      for (int m = 0; m < adj_[v].mult[i]; ++m) out.add_edge(new_label[v], new_label[w]);
    }
    if (adj_[v].loop) out.add_loop(new_label[v]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// automorphisms

// Individualization-refinement. Counts automorphisms as color-respecting
// bijections between two seeded refinements of the same graph: refute branches
// by color-multiset mismatch, verify edges only at discrete leaves.
struct AutoCount {
  const CubicMultigraph& g;
  int n;

  explicit AutoCount(const CubicMultigraph& graph) : g(graph), n(graph.n_vertices()) {}

  static bool same_multiset(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // bijection determined by matching discrete colors; 1 if it preserves the graph
  long long leaf(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::pair<std::uint64_t, int>> where(n);
    for (int w = 0; w < n; ++w) where[w] = {b[w], w};
    std::sort(where.begin(), where.end());
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) {
      auto it = std::lower_bound(where.begin(), where.end(),
                                 std::make_pair(a[v], -1));
      img[v] = it->second;
    }
    for (int v = 0; v < n; ++v) {
      if (g.loops(v) != g.loops(img[v])) return 0;
      const auto& av = g.adj_[v];
      for (int i = 0; i < av.cnt; ++i)
        if (g.multiplicity(img[v], img[av.nbr[i]]) != av.mult[i]) return 0;
    }
    return 1;
  }

  long long go(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, int depth) const {
    if (depth > n) throw std::logic_error("automorphism search failed to converge");
    a = g.refine64(std::move(a));
    b = g.refine64(std::move(b));
    if (!same_multiset(a, b)) return 0;
    // smallest class of size >= 2, ties by color value
    std::vector<std::uint64_t> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t cls = 0;
    int cls_size = n + 1;
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const int sz = static_cast<int>(j - i);
      if (sz >= 2 && sz < cls_size) {
        cls_size = sz;
        cls = sorted[i];
      }
      i = j;
    }
    if (cls_size > n) return leaf(a, b);
    int t = 0;
    while (a[t] != cls) ++t;
    const std::uint64_t fresh = mix64(0xc0ffee3ull, cls + depth);
    long long total = 0;
    for (int w = 0; w < n; ++w) {
      if (b[w] != cls) continue;
      std::vector<std::uint64_t> a2 = a, b2 = b;
      a2[t] = fresh;
      b2[w] = fresh;
      total += go(std::move(a2), std::move(b2), depth + 1);
    }
    return total;
  }
};

long long CubicMultigraph::automorphism_count() const {
  if (n_ == 0) return 1;
  AutoCount s(*this);
  return s.go(std::vector<std::uint64_t>(n_, 0), std::vector<std::uint64_t>(n_, 0), 0);
}

// ---------------------------------------------------------------------------
// circuits and girth

long long count_circuits(const CubicMultigraph& g, int k) {
  if (k < 1) throw DomainError("count_circuits: k must be >= 1");
  const int n = g.n_vertices();
  if (k == 1) {
    long long c = 0;
    for (int v = 0; v < n; ++v) c += g.loops(v);
    return c;
  }
  if (k == 2) {
    long long c = 0;
    for (int v = 0; v < n; ++v)
      for (auto [w, m] : g.neighbors(v))
        if (w > v) c += static_cast<long long>(m) * (m - 1) / 2;
    return c;
  }
  // directed vertex-distinct closed walks anchored at their minimum vertex,
  // weighted by multiplicity products; each circuit is traversed twice
  long long directed = 0;
  std::vector<char> inpath(n, 0);
  for (int s = 0; s < n; ++s) {
    inpath[s] = 1;
    // depth-first over paths of k-1 edges staying above s
    std::function<void(int, long long, int)> rec = [&](int v, long long prod, int depth) {
      for (auto [w, m] : g.neighbors(v)) {
        if (depth == k - 1) {
          if (w == s) directed += prod * m;
          continue;
        }
        if (w <= s || inpath[w]) continue;
        inpath[w] = 1;
        rec(w, prod * m, depth + 1);
        inpath[w] = 0;
      }
    };
    rec(s, 1, 0);
    inpath[s] = 0;
  }
  return directed / 2;
}

std::optional<int> girth(const CubicMultigraph& g) {
  const int n = g.n_vertices();
  if (count_circuits(g, 1) > 0) return 1;
  if (count_circuits(g, 2) > 0) return 2;
  // simple-skeleton girth via BFS from each vertex
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    size_t head = 0;
    while (head < queue.size()) {
      const int v = queue[head++];
      for (auto [w, m] : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          const int len = dist[v] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

// ---------------------------------------------------------------------------
// subgraph copies

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long count_subgraph_copies(const CubicMultigraph& g, const CubicMultigraph& pattern) {
  const int np = pattern.n_vertices();
  if (np == 0 || np > 8) throw DomainError("count_subgraph_copies: pattern must have 1..8 vertices");
  const int n = g.n_vertices();
  if (np > n) return 0;

  // order pattern vertices so that each one (after the first of its component)
  // has an already-placed neighbor
  std::vector<int> order;
  std::vector<char> placed(np, 0);
  for (int seed = 0; seed < np; ++seed) {
    if (placed[seed]) continue;
    std::vector<int> queue{seed};
    placed[seed] = 1;
    size_t head = 0;
    while (head < queue.size()) {
      const int v = queue[head++];
      order.push_back(v);
      for (auto [w, m] : pattern.neighbors(v)) {
        if (!placed[w]) {
          placed[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<int> img(np, -1);
  std::vector<char> used(n, 0);
  long long embeddings = 0;

  std::function<void(size_t, long long)> rec = [&](size_t idx, long long weight) {
    if (idx == order.size()) {
      embeddings += weight;
      return;
    }
    const int pv = order[idx];
    // candidate images: neighbors of an already-mapped pattern-neighbor, else all
    int anchor = -1;
    for (size_t j = 0; j < idx; ++j) {
      if (pattern.multiplicity(order[j], pv) > 0) {
        anchor = order[j];
        break;
      }
    }
    std::vector<int> cands;
    if (anchor >= 0) {
      for (auto [w, m] : g.neighbors(img[anchor])) cands.push_back(w);
    } else {
      for (int w = 0; w < n; ++w) cands.push_back(w);
    }
    for (int hw : cands) {
      if (used[hw]) continue;
      if (g.loops(hw) < pattern.loops(pv)) continue;
      long long w2 = weight * binom(g.loops(hw), pattern.loops(pv));
      bool ok = true;
      for (size_t j = 0; j < idx && ok; ++j) {
        const int need = pattern.multiplicity(order[j], pv);
        if (need == 0) continue;
        const int have = g.multiplicity(img[order[j]], hw);
        if (have < need)
          ok = false;
        else
          w2 *= binom(have, need);
      }
      if (!ok || w2 == 0) continue;
      img[pv] = hw;
      used[hw] = 1;
      rec(idx + 1, w2);
      used[hw] = 0;
      img[pv] = -1;
    }
  };
  rec(0, 1);

  const long long aut = pattern.automorphism_count();
  if (embeddings % aut != 0)
    throw std::logic_error("count_subgraph_copies: embedding count not divisible by pattern automorphisms");
  return embeddings / aut;
}

// ---------------------------------------------------------------------------
// edge defect

long long edge_defect(const CubicMultigraph& g, const VertexPermutation& pi) {
  const int n = g.n_vertices();
  if (static_cast<int>(pi.image.size()) != n)
    throw DomainError("edge_defect: permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (int v : pi.image) {
    if (v < 0 || v >= n || seen[v]) throw DomainError("edge_defect: not a permutation");
    seen[v] = 1;
  }
  long long defect = 0;
  for (int u = 0; u < n; ++u) {
    const int lu = g.loops(u), lpi = g.loops(pi.image[u]);
    if (lu > lpi) defect += lu - lpi;
    for (auto [v, m] : g.neighbors(u)) {
      if (v < u) continue;
      const int m2 = g.multiplicity(pi.image[u], pi.image[v]);
      if (m > m2) defect += m - m2;
    }
  }
  return defect;
}

std::vector<VertexPermutation> find_small_defect_maps(const CubicMultigraph& g, int max_defect,
                                                      int max_support) {
  const int n = g.n_vertices();
  if (max_defect < 0 || max_support < 0)
    throw DomainError("find_small_defect_maps: negative budget");
  if (max_support > 12 && max_support < n)
    throw CapabilityError("find_small_defect_maps: support cap above 12 not supported");
  std::vector<VertexPermutation> out;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);

  // partial defect over pairs with both endpoints decided is a lower bound
  std::function<void(int, int, long long)> rec = [&](int v, int moved, long long defect) {
    if (defect > max_defect || moved > max_support) return;
    if (v == n) {
      if (moved > 0) out.push_back(VertexPermutation{img});
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      const int nmoved = moved + (w != v ? 1 : 0);
      if (nmoved > max_support) continue;
      long long d = defect;
      const int lv = g.loops(v), lw = g.loops(w);
      if (lv > lw) d += lv - lw;
      for (int u = 0; u < v && d <= max_defect; ++u) {
        const int m = g.multiplicity(v, u);
        if (m == 0) continue;
        const int m2 = g.multiplicity(w, img[u]);
        if (m > m2) d += m - m2;
      }
      if (d > max_defect) continue;
      img[v] = w;
      used[w] = 1;
      rec(v + 1, nmoved, d);
      used[w] = 0;
      img[v] = -1;
    }
  };
  rec(0, 0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// text format

std::string format_multigraph(const CubicMultigraph& g) {
  std::ostringstream os;
  os << g.n_vertices() << "\n";
  for (int u = 0; u < g.n_vertices(); ++u)
    for (auto [v, m] : g.neighbors(u))
      if (v > u) os << u << " " << v << " " << m << "\n";
  for (int v = 0; v < g.n_vertices(); ++v)
    if (g.loops(v)) os << v << " L\n";
  return os.str();
}

CubicMultigraph parse_multigraph(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw StructuralError("multigraph: missing vertex count");
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(line, &pos);
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos != line.size()) throw StructuralError("multigraph: malformed header");
  } catch (const std::logic_error&) {
    throw StructuralError("multigraph: malformed header");
  }
  if (n <= 0 || n > 100000) throw StructuralError("multigraph: vertex count out of range");
  CubicMultigraph g(n);
  while (std::getline(is, line)) {
    if (line.empty()) throw StructuralError("multigraph: blank line");
    std::istringstream ls(line);
    long long a, b;
    std::string tail;
    if (!(ls >> a)) throw StructuralError("multigraph: malformed row");
    if (!(ls >> tail)) throw StructuralError("multigraph: malformed row");
    if (tail == "L") {
      if (ls >> tail) throw StructuralError("multigraph: trailing tokens");
      if (a < 0 || a >= n) throw StructuralError("multigraph: loop vertex out of range");
      g.add_loop(static_cast<int>(a));
      continue;
    }
    try {
      size_t pos = 0;
      b = std::stoll(tail, &pos);
      if (pos != tail.size()) throw StructuralError("multigraph: malformed row");
    } catch (const std::logic_error&) {
      throw StructuralError("multigraph: malformed row");
    }
    long long m;
    if (!(ls >> m)) throw StructuralError("multigraph: edge row missing multiplicity");
    if (ls >> tail) throw StructuralError("multigraph: trailing tokens");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw StructuralError("multigraph: bad edge endpoints");
    if (m < 1 || m > 3) throw StructuralError("multigraph: multiplicity out of range");
    for (int i = 0; i < m; ++i) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  return g;
}

CubicMultigraph disjoint_union(const CubicMultigraph& a, const CubicMultigraph& b) {
  CubicMultigraph g(a.n_vertices() + b.n_vertices());
  const int off = a.n_vertices();
  for (int u = 0; u < a.n_vertices(); ++u) {
    for (auto [v, m] : a.neighbors(u))
      if (v > u)
        for (int i = 0; i < m; ++i) g.add_edge(u, v);
    if (a.loops(u)) g.add_loop(u);
  }
  for (int u = 0; u < b.n_vertices(); ++u) {
    for (auto [v, m] : b.neighbors(u))
      if (v > u)
        for (int i = 0; i < m; ++i) g.add_edge(u + off, v + off);
    if (b.loops(u)) g.add_loop(u + off);
  }
  return g;
}

}  // namespace modgraph
