// test_multigraph.cpp
// Half-edge collapse, canonical codes, automorphisms, circuits, defect maps.
// Expected class counts at N = 2 and N = 4 are frozen from an exhaustive scan
// over all perfect matchings (15 and 10395 leaves).
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "modgraph/multigraph.hpp"
#include "modgraph/pairing.hpp"
#include "modgraph/rng.hpp"

using namespace modgraph;

namespace {

CubicMultigraph triple_edge() { return CubicMultigraph::from_edge_list(2, {{0, 1, 3}}); }
CubicMultigraph dumbbell() { return CubicMultigraph::from_edge_list(2, {{0, 1, 1}}, {0, 1}); }
CubicMultigraph k4() {
  return CubicMultigraph::from_edge_list(
      4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}
CubicMultigraph prism() {
  return CubicMultigraph::from_edge_list(6, {{0, 1, 1},
                                             {1, 2, 1},
                                             {0, 2, 1},
                                             {3, 4, 1},
                                             {4, 5, 1},
                                             {3, 5, 1},
                                             {0, 3, 1},
                                             {1, 4, 1},
                                             {2, 5, 1}});
}
CubicMultigraph k33() {
  return CubicMultigraph::from_edge_list(6, {{0, 3, 1},
                                             {0, 4, 1},
                                             {0, 5, 1},
                                             {1, 3, 1},
                                             {1, 4, 1},
                                             {1, 5, 1},
                                             {2, 3, 1},
                                             {2, 4, 1},
                                             {2, 5, 1}});
}

// explicit isomorphism search, the independent oracle for canonical codes
bool brute_isomorphic(const CubicMultigraph& a, const CubicMultigraph& b) {
  const int n = a.n_vertices();
  if (n != b.n_vertices()) return false;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (a.loops(v) != b.loops(perm[v])) ok = false;
      for (int u = v + 1; u < n && ok; ++u)
        if (a.multiplicity(u, v) != b.multiplicity(perm[u], perm[v])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CubicMultigraph relabel(const CubicMultigraph& g, const std::vector<int>& perm) {
  CubicMultigraph out(g.n_vertices());
  for (int v = 0; v < g.n_vertices(); ++v) {
    for (auto [w, m] : g.neighbors(v))
      if (w > v)
        for (int i = 0; i < m; ++i) out.add_edge(perm[v], perm[w]);
    if (g.loops(v)) out.add_loop(perm[v]);
  }
  return out;
}

}  // namespace

TEST_CASE("pairing collapse produces the right multigraphs") {
  Pairing crossing = pairing_from_pairs(2, {{0, 3}, {1, 4}, {2, 5}});
  CubicMultigraph t = CubicMultigraph::from_pairing(crossing);
  CHECK(t.multiplicity(0, 1) == 3);
  CHECK(t.loops(0) == 0);
  CHECK(t == triple_edge());

  Pairing looped = pairing_from_pairs(2, {{0, 1}, {2, 5}, {3, 4}});
  CubicMultigraph d = CubicMultigraph::from_pairing(looped);
  CHECK(d.loops(0) == 1);
  CHECK(d.loops(1) == 1);
  CHECK(d.multiplicity(0, 1) == 1);
  CHECK(d == dumbbell());
}

TEST_CASE("degree identity holds for every matching at N=2") {
  int leaves = 0;
  for_each_pairing(2, [&](const Pairing& p) {
    ++leaves;
    CubicMultigraph g = CubicMultigraph::from_pairing(p);
    for (int v = 0; v < 2; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.is_cubic());
  });
  CHECK(leaves == 15);
}

TEST_CASE("exhaustive scan at N=2: two classes with masses 6 and 9") {
  std::map<std::string, int> mass;
  long long total_loops = 0;
  for_each_pairing(2, [&](const Pairing& p) {
    CubicMultigraph g = CubicMultigraph::from_pairing(p);
    mass[g.canonical_code()] += 1;
    total_loops += count_circuits(g, 1);
  });
  REQUIRE(mass.size() == 2);
  std::vector<int> masses;
  for (auto& [code, m] : mass) masses.push_back(m);
  std::sort(masses.begin(), masses.end());
  CHECK(masses == std::vector<int>{6, 9});
  CHECK(mass.at(triple_edge().canonical_code()) == 6);
  CHECK(mass.at(dumbbell().canonical_code()) == 9);
  CHECK(total_loops == 18);  // mean 18/15 under the uniform matching law
}

TEST_CASE("exhaustive scan at N=4: 8 classes, 5 connected, 1 simple") {
  std::set<std::string> all, connected, simple;
  long long leaves = 0;
  for_each_pairing(4, [&](const Pairing& p) {
    ++leaves;
    CubicMultigraph g = CubicMultigraph::from_pairing(p);
    const std::string& code = g.canonical_code();
    all.insert(code);
    if (g.is_connected()) connected.insert(code);
    bool s = true;
    for (int v = 0; v < 4 && s; ++v) {
      if (g.loops(v)) s = false;
      for (auto [w, m] : g.neighbors(v))
        if (m > 1) s = false;
    }
    if (s) simple.insert(code);
  });
  CHECK(leaves == 10395);
  CHECK(all.size() == 8);
  CHECK(connected.size() == 5);
  CHECK(simple.size() == 1);
  CHECK(simple.count(k4().canonical_code()) == 1);
}

TEST_CASE("canonical codes agree with explicit isomorphism search at N=4") {
  std::map<std::string, std::vector<CubicMultigraph>> reps;
  for_each_pairing(4, [&](const Pairing& p) {
    CubicMultigraph g = CubicMultigraph::from_pairing(p);
    auto& bucket = reps[g.canonical_code()];
    bool dup = false;
    for (const auto& h : bucket)
      if (h == g) dup = true;
    if (!dup && bucket.size() < 4) bucket.push_back(g);
  });
  std::vector<std::string> codes;
  for (auto& [code, bucket] : reps) {
    codes.push_back(code);
    for (size_t i = 1; i < bucket.size(); ++i) CHECK(brute_isomorphic(bucket[0], bucket[i]));
  }
  for (size_t i = 0; i < codes.size(); ++i)
    for (size_t j = i + 1; j < codes.size(); ++j)
      CHECK_FALSE(brute_isomorphic(reps[codes[i]][0], reps[codes[j]][0]));
}

TEST_CASE("canonical code is relabeling-invariant and canonical_form is idempotent") {
  SplitMix64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + 2 * static_cast<int>(uniform_below(rng, 3));  // 6, 8, 10
    std::vector<int> halves(3 * n);
    for (int i = 0; i < 3 * n; ++i) halves[i] = i;
    shuffle(halves, rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3 * n; i += 2) pairs.emplace_back(halves[i], halves[i + 1]);
    CubicMultigraph g = CubicMultigraph::from_pairing(pairing_from_pairs(n, pairs));

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    shuffle(perm, rng);
    CubicMultigraph h = relabel(g, perm);
    CHECK(g.canonical_code() == h.canonical_code());
    CHECK(g.automorphism_count() == h.automorphism_count());

    CubicMultigraph c = g.canonical_form();
    CHECK(c.canonical_code() == g.canonical_code());
    CHECK(c.canonical_form() == c);
  }
}

TEST_CASE("automorphism counts on fixtures") {
  CHECK(triple_edge().automorphism_count() == 2);
  CHECK(dumbbell().automorphism_count() == 2);
  CHECK(k4().automorphism_count() == 24);
  CHECK(prism().automorphism_count() == 12);
  CHECK(k33().automorphism_count() == 72);
}

TEST_CASE("circuit counts") {
  CHECK(count_circuits(dumbbell(), 1) == 2);
  CHECK(count_circuits(dumbbell(), 2) == 0);
  CHECK(count_circuits(triple_edge(), 1) == 0);
  CHECK(count_circuits(triple_edge(), 2) == 3);
  CHECK(count_circuits(triple_edge(), 3) == 0);  // closed walks on 2 vertices have even length
  CHECK(count_circuits(k4(), 3) == 4);
  CHECK(count_circuits(k4(), 4) == 3);
  CHECK(count_circuits(prism(), 3) == 2);
  CHECK(count_circuits(prism(), 4) == 3);
  CHECK(count_circuits(prism(), 5) == 6);
  CHECK(count_circuits(k33(), 3) == 0);
  CHECK(count_circuits(k33(), 4) == 9);
  CHECK_THROWS_AS(count_circuits(k4(), 0), DomainError);
}

TEST_CASE("girth") {
  CHECK(girth(dumbbell()) == 1);
  CHECK(girth(triple_edge()) == 2);
  CHECK(girth(k4()) == 3);
  CHECK(girth(k33()) == 4);
  CubicMultigraph path = CubicMultigraph::from_edge_list(2, {{0, 1, 1}});
  CHECK_FALSE(girth(path).has_value());
}

TEST_CASE("subgraph copy counts") {
  CubicMultigraph triangle =
      CubicMultigraph::from_edge_list(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CubicMultigraph double_edge = CubicMultigraph::from_edge_list(2, {{0, 1, 2}});
  CubicMultigraph loop_vertex = CubicMultigraph::from_edge_list(1, {}, {0});

  CHECK(count_subgraph_copies(k4(), k4()) == 1);
  CHECK(count_subgraph_copies(k4(), triangle) == 4);
  CHECK(count_subgraph_copies(prism(), triangle) == 2);
  CHECK(count_subgraph_copies(prism(), k4()) == 0);
  CHECK(count_subgraph_copies(triple_edge(), double_edge) == 3);
  CHECK(count_subgraph_copies(triple_edge(), triple_edge()) == 1);
  CHECK(count_subgraph_copies(dumbbell(), loop_vertex) == 2);
  CHECK(count_subgraph_copies(k33(), triangle) == 0);
}

TEST_CASE("edge defect") {
  VertexPermutation id4{{0, 1, 2, 3}};
  CHECK(edge_defect(k4(), id4) == 0);
  VertexPermutation swap01{{1, 0, 2, 3}};
  CHECK(edge_defect(k4(), swap01) == 0);

  VertexPermutation swap2{{1, 0}};
  CHECK(edge_defect(triple_edge(), swap2) == 0);
  CHECK(edge_defect(dumbbell(), swap2) == 0);

  VertexPermutation prism_swap{{1, 0, 2, 3, 4, 5}};
  CHECK(edge_defect(prism(), prism_swap) == 2);

  // multiplicity excess: collapse a double edge onto a single edge
  CubicMultigraph h = CubicMultigraph::from_edge_list(
      4, {{0, 1, 2}, {2, 3, 2}, {0, 2, 1}, {1, 3, 1}});
  // map (0,1,2,3) -> (0,2,1,3): the double edge 0-1 lands on single edge 0-2
  VertexPermutation mix{{0, 2, 1, 3}};
  CHECK(edge_defect(h, mix) == 2);  // both double edges lose one copy each

  CHECK_THROWS_AS(edge_defect(k4(), VertexPermutation{{0, 0, 1, 2}}), DomainError);
  CHECK_THROWS_AS(edge_defect(k4(), VertexPermutation{{0, 1}}), DomainError);
}

TEST_CASE("small defect maps: complete within caps, defect-0 maps are Aut") {
  auto k4_auts = find_small_defect_maps(k4(), 0, 4);
  CHECK(k4_auts.size() == 23);
  for (const auto& pi : k4_auts) CHECK(edge_defect(k4(), pi) == 0);

  auto t_auts = find_small_defect_maps(triple_edge(), 0, 2);
  REQUIRE(t_auts.size() == 1);
  CHECK(t_auts[0].image == std::vector<int>{1, 0});

  for (const auto& g : {triple_edge(), dumbbell(), k4(), prism(), k33()}) {
    auto maps = find_small_defect_maps(g, 0, g.n_vertices());
    CHECK(static_cast<long long>(maps.size()) + 1 == g.automorphism_count());
  }

  auto near = find_small_defect_maps(prism(), 2, 2);
  bool found_swap = false;
  for (const auto& pi : near) {
    CHECK(pi.support() <= 2);
    CHECK(pi.support() > 0);
    CHECK(edge_defect(prism(), pi) <= 2);
    if (pi.image == std::vector<int>{1, 0, 2, 3, 4, 5}) found_swap = true;
  }
  CHECK(found_swap);
}

TEST_CASE("multigraph text format round trips byte-exact") {
  for (const auto& g : {triple_edge(), dumbbell(), k4(), prism(), k33()}) {
    const std::string text = format_multigraph(g);
    CubicMultigraph back = parse_multigraph(text);
    CHECK(back == g);
    CHECK(format_multigraph(back) == text);
  }
  CHECK_THROWS_AS(parse_multigraph(""), StructuralError);
  CHECK_THROWS_AS(parse_multigraph("x\n"), StructuralError);
  CHECK_THROWS_AS(parse_multigraph("2\n0 1\n"), StructuralError);
  CHECK_THROWS_AS(parse_multigraph("2\n0 1 4\n"), StructuralError);
  CHECK_THROWS_AS(parse_multigraph("2\n0 2 1\n"), StructuralError);
  CHECK_THROWS_AS(parse_multigraph("2\n0 1 1 9\n"), StructuralError);
}

TEST_CASE("structural validation of pairings") {
  CHECK_THROWS_AS(pairing_from_pairs(2, {{0, 1}, {2, 3}}), StructuralError);
  CHECK_THROWS_AS(pairing_from_pairs(2, {{0, 0}, {1, 2}, {3, 4}}), StructuralError);
  CHECK_THROWS_AS(pairing_from_pairs(2, {{0, 1}, {0, 2}, {3, 4}}), StructuralError);
  CHECK_THROWS_AS(pairing_from_pairs(2, {{0, 1}, {2, 9}, {3, 4}}), StructuralError);
  CHECK_THROWS_AS(pairing_from_pairs(3, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}), DomainError);
  CHECK_THROWS_AS(parse_pairing("2\n0 1\n2 3\n4\n"), StructuralError);

  Pairing p = pairing_from_pairs(2, {{0, 3}, {1, 4}, {2, 5}});
  const std::string text = format_pairing(p);
  Pairing q = parse_pairing(text);
  CHECK(format_pairing(q) == text);
  CHECK(q.partner == p.partner);
}

TEST_CASE("disjoint union builds disconnected graphs") {
  CubicMultigraph g = disjoint_union(triple_edge(), dumbbell());
  CHECK(g.n_vertices() == 4);
  CHECK_FALSE(g.is_connected());
  CHECK(g.is_cubic());
  CHECK(count_circuits(g, 1) == 2);
  CHECK(count_circuits(g, 2) == 3);
}
