// multigraph.hpp
// Multigraphs with loops, maximum degree 3 (a loop adds 2 to its vertex's
// degree, so loops <= 1 and multiplicities <= 3 always hold). The cubic case,
// every vertex of degree exactly 3, is the main citizen; sub-cubic graphs
// appear as partial objects during enumeration.
//
// Canonical code: lexicographically greatest row encoding over vertex
// orderings, rows = (refined color rank, loop flag, multiplicities to earlier
// vertices). Equal codes iff isomorphic. Deterministic across platforms,
// designed for desk scale (canonicalization is exercised up to ~14 vertices;
// larger graphs work when color refinement separates vertices, as it does for
// random cubic graphs).
//
// Text format (canonical, byte-exact round trip):
//   line 1: N
//   edge rows  "u v m"  (u < v, multiplicity m >= 1, lexicographic)
//   loop rows  "v L"    (L = 1, ascending v)
#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "modgraph/errors.hpp"
#include "modgraph/pairing.hpp"

namespace modgraph {

class CubicMultigraph {
 public:
  CubicMultigraph() = default;
  explicit CubicMultigraph(int n_vertices);
  CubicMultigraph(const CubicMultigraph& o);
  CubicMultigraph(CubicMultigraph&& o) noexcept;
  CubicMultigraph& operator=(const CubicMultigraph& o);
  CubicMultigraph& operator=(CubicMultigraph&& o) noexcept;
  ~CubicMultigraph();

  static CubicMultigraph from_pairing(const Pairing& p);
  // edges as (u, v, multiplicity); loop_vertices lists vertices carrying a loop
  static CubicMultigraph from_edge_list(int n_vertices,
                                        const std::vector<std::tuple<int, int, int>>& edges,
                                        const std::vector<int>& loop_vertices = {});

  int n_vertices() const { return n_; }
  int multiplicity(int u, int v) const;  // u != v
  int loops(int v) const;
  int degree(int v) const;  // sum of multiplicities + 2 * loops
  bool is_cubic() const;
  int edge_count() const;  // loops count once
  // distinct neighbors of v with multiplicities, ascending by neighbor
  std::vector<std::pair<int, int>> neighbors(int v) const;

  // throws DomainError if the degree cap or loop cap would be violated
  void add_edge(int u, int v);
  void add_loop(int v);

  bool is_connected() const;

  const std::string& canonical_code() const;  // cached; race-free idempotent fill
  CubicMultigraph canonical_form() const;     // relabeled along the canonical order
  long long automorphism_count() const;

  bool operator==(const CubicMultigraph& o) const;  // labeled equality

 private:
  struct VertexAdj {
    std::array<int, 3> nbr{{-1, -1, -1}};
    std::array<uint8_t, 3> mult{{0, 0, 0}};
    uint8_t cnt = 0;
    uint8_t loop = 0;
  };

  int n_ = 0;
  std::vector<VertexAdj> adj_;
  mutable std::atomic<const std::string*> code_cache_{nullptr};

  void bump(int u, int v);  // one endpoint update
  std::vector<int> refined_colors() const;
  std::vector<std::uint64_t> refine64(std::vector<std::uint64_t> color) const;
  friend struct CanonSearch;
  friend struct AutoCount;
};

// Number of k-circuits: subgraphs that are single cycles with k edges.
// k = 1 loops, k = 2 parallel pairs C(m,2), k >= 3 vertex-distinct cycles
// weighted by edge multiplicity products. Closed walks on 2 vertices have even
// length, so a triple edge has three 2-circuits and no 3-circuit.
long long count_circuits(const CubicMultigraph& g, int k);

// Smallest k with a k-circuit, empty for forests.
std::optional<int> girth(const CubicMultigraph& g);

// Copies of `pattern` in `g`: injective vertex embeddings weighted by
// C(m_host, m_pattern) per edge and loop, divided by |Aut(pattern)|.
// Pattern must fit the degree-3 representation; anything denser cannot embed
// into a cubic host anyway.
long long count_subgraph_copies(const CubicMultigraph& g, const CubicMultigraph& pattern);

struct VertexPermutation {
  std::vector<int> image;
  int support() const {
    int s = 0;
    for (size_t v = 0; v < image.size(); ++v)
      if (image[v] != static_cast<int>(v)) ++s;
    return s;
  }
};

// Edge defect: number of edges (with multiplicity, loops included) whose image
// under the vertex map is not an edge; multiplicity excess counts per copy.
long long edge_defect(const CubicMultigraph& g, const VertexPermutation& pi);

// All non-identity vertex permutations with support() <= max_support and
// edge_defect <= max_defect, in lexicographic image order. Complete within the
// support cap. With max_defect = 0 and full support this lists Aut(g) \ {id}.
std::vector<VertexPermutation> find_small_defect_maps(const CubicMultigraph& g, int max_defect,
                                                      int max_support);

std::string format_multigraph(const CubicMultigraph& g);
CubicMultigraph parse_multigraph(const std::string& text);

CubicMultigraph disjoint_union(const CubicMultigraph& a, const CubicMultigraph& b);

}  // namespace modgraph
