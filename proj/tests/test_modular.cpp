// test_modular.cpp
// The three finite quotient graphs.  Pants and flip goldens were frozen from
// BFS runs cross-checked against independent enumeration: MP has one vertex
// per connected cubic class on 2g-2 vertices, MF one per one-vertex
// triangulation class on 4g-2 triangles.  Degree caps are sharp: every flip
// vertex has multi-degree exactly 6g-3, the pants maximum is exactly 6g-6.
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "modgraph/combinatorial_map.hpp"
#include "modgraph/enumeration.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/genus_formulas.hpp"
#include "modgraph/modular_graphs.hpp"
#include "modgraph/moves.hpp"

using namespace modgraph;

TEST_CASE("modular curve graph shape") {
  ModularGraph c5 = build_modular_curve_graph(5);
  CHECK(c5.vertex_codes.size() == 3);  // nonseparating, separating_1, separating_2
  CHECK(c5.vertex_labels[0] == "nonseparating");
  CHECK(c5.vertex_labels[1] == "separating_1");
  // odd genus: every type has a second disjoint copy of itself
  for (const auto& [code, cnt] : c5.loop_counts) CHECK(cnt == 1);
  CHECK(c5.simple_edges.size() == 3);  // complete on 3 vertices

  ModularGraph c4 = build_modular_curve_graph(4);
  CHECK(c4.vertex_codes.size() == 3);
  // even genus: the half-half separating curve has no second disjoint copy
  CHECK(c4.loop_counts.at("separating_2") == 0);
  CHECK(c4.loop_counts.at("separating_1") == 1);
  CHECK(c4.loop_counts.at("nonseparating") == 1);

  ModularGraph c2 = build_modular_curve_graph(2);
  CHECK(c2.vertex_codes.size() == 2);
  CHECK(c2.loop_counts.at("nonseparating") == 1);
  CHECK(c2.loop_counts.at("separating_1") == 0);
  CHECK(graph_summary(c2).loop_total == 1);
  CHECK_THROWS_AS(build_modular_curve_graph(1), DomainError);
}

TEST_CASE("pants graph of genus 2") {
  ModularGraph mp = build_modular_pants_graph(2);
  ModularSummary s = graph_summary(mp);
  CHECK(s.p == 2);
  CHECK(s.q_simple == 1);
  CHECK(s.q_multi == 3);
  CHECK(s.loop_total == 5);
  CHECK(s.min_multi_degree == 4);
  CHECK(s.max_multi_degree == 6);
  CHECK_FALSE(s.girth_simple.has_value());
  // the directions disagree: triple edge -> dumbbell 3 ways, back 2 ways
  std::vector<long long> directed;
  for (const auto& [key, cnt] : mp.directed_counts) directed.push_back(cnt);
  std::sort(directed.begin(), directed.end());
  CHECK(directed == std::vector<long long>{2, 3});
}

TEST_CASE("pants graph of genus 3 is a tree on five classes") {
  ModularGraph mp = build_modular_pants_graph(3);
  ModularSummary s = graph_summary(mp);
  CHECK(s.p == 5);
  CHECK(s.q_simple == 4);
  CHECK(s.q_multi == 20);
  CHECK(s.loop_total == 24);
  CHECK(s.max_multi_degree == 12);
  CHECK_FALSE(s.girth_simple.has_value());
  SimpleGraph sg = modular_simple_graph(mp);
  CHECK(simple_is_connected(sg));
  CHECK(simple_edge_count(sg) == sg.n - 1);
  GenusReport r = betti_genus_bounds(s.p, s.q_simple, s.girth_simple);
  CHECK(r.lower_int() == 0);
  CHECK(r.upper_int() == 0);
}

TEST_CASE("pants graph goldens at genus 4 and 5") {
  ModularGraph g4 = build_modular_pants_graph(4);
  ModularSummary s4 = graph_summary(g4);
  CHECK(s4.p == 17);
  CHECK(s4.q_simple == 25);
  CHECK(s4.q_multi == 115);
  CHECK(s4.loop_total == 112);
  CHECK(s4.max_multi_degree == 18);
  CHECK(s4.girth_simple == 3);

  ModularGraph g5 = build_modular_pants_graph(5);
  ModularSummary s5 = graph_summary(g5);
  CHECK(s5.p == 71);
  CHECK(s5.q_simple == 179);
  CHECK(s5.q_multi == 694);
  CHECK(s5.loop_total == 553);
  CHECK(s5.max_multi_degree == 24);
  CHECK(s5.girth_simple == 3);
}

TEST_CASE("pants vertices are the connected classes and degrees count moves") {
  for (int g : {2, 3, 4}) {
    ModularGraph mp = build_modular_pants_graph(g);
    CHECK(static_cast<long long>(mp.vertex_codes.size()) ==
          enumerate_cubic_multigraphs(2 * g - 2, GraphFilter::connected).counts.connected);
    for (size_t i = 0; i < mp.pants_reps.size(); ++i) {
      const CubicMultigraph& rep = mp.pants_reps[i];
      CHECK(rep.n_vertices() == 2 * g - 2);
      CHECK(rep.is_cubic());
      CHECK(rep.is_connected());
      long long deg = modular_multi_degree(mp, static_cast<int>(i));
      CHECK(deg == static_cast<long long>(pants_move_neighbors(rep).size()));
      CHECK(deg <= 6 * g - 6);
    }
    ModularSummary s = graph_summary(mp);
    CHECK(s.max_multi_degree == 6 * g - 6);
  }
}

TEST_CASE("flip graph of the one-holed torus") {
  ModularGraph mf = build_modular_flip_graph(1);
  ModularSummary s = graph_summary(mf);
  CHECK(s.p == 1);
  CHECK(s.q_simple == 0);
  CHECK(s.loop_total == 3);
  CHECK(s.min_multi_degree == 3);
  CHECK(s.max_multi_degree == 3);
}

TEST_CASE("flip graph of genus 2") {
  ModularGraph mf = build_modular_flip_graph(2);
  ModularSummary s = graph_summary(mf);
  CHECK(s.p == 9);
  CHECK(s.q_simple == 13);
  CHECK(s.loop_total == 23);
  CHECK(s.min_multi_degree == 9);   // every arc flips: degree = 3N/2 = 6g-3
  CHECK(s.max_multi_degree == 9);
  CHECK(s.girth_simple == 3);
}

TEST_CASE("flip vertices are the triangulation classes") {
  for (int g : {1, 2}) {
    ModularGraph mf = build_modular_flip_graph(g);
    std::vector<std::string> rep_codes;
    for (const auto& m : mf.flip_reps) {
      SurfaceInvariants inv = surface_invariants(m);
      CHECK(inv.n_punctures == 1);
      CHECK(inv.genus == g);
      rep_codes.push_back(canonical_map_code(m));
    }
    std::sort(rep_codes.begin(), rep_codes.end());
    CHECK(rep_codes == enumerate_one_vertex_triangulations(g).class_codes);
  }
}

TEST_CASE("vertex index round trip and adjacency symmetry") {
  ModularGraph mp = build_modular_pants_graph(4);
  for (size_t i = 0; i < mp.vertex_codes.size(); ++i)
    CHECK(modular_vertex_index(mp, mp.vertex_codes[i]) == static_cast<int>(i));
  CHECK_THROWS_AS(modular_vertex_index(mp, "nope"), DomainError);
  for (const auto& [key, cnt] : mp.directed_counts) {
    CHECK(cnt > 0);
    CHECK(mp.directed_counts.count({key.second, key.first}) == 1);
  }
  for (const auto& [key, mult] : mp.edge_multiplicities) {
    CHECK(key.first < key.second);
    CHECK(mp.simple_edges.count(key) == 1);
    long long ab = mp.directed_counts.at({key.first, key.second});
    long long ba = mp.directed_counts.at({key.second, key.first});
    CHECK(mult == std::max(ab, ba));
  }
}

TEST_CASE("summary internals agree with the edge maps") {
  ModularGraph mp = build_modular_pants_graph(4);
  ModularSummary s = graph_summary(mp);
  CHECK(s.q_simple == static_cast<long long>(mp.simple_edges.size()));
  long long qm = 0;
  for (const auto& [key, mult] : mp.edge_multiplicities) qm += mult;
  CHECK(s.q_multi == qm);
  long long lt = 0;
  for (const auto& [code, cnt] : mp.loop_counts) lt += cnt;
  CHECK(s.loop_total == lt);
}

TEST_CASE("dot and json exports are well formed") {
  ModularGraph mp = build_modular_pants_graph(2);
  std::string dot = modular_to_dot(mp);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
  nlohmann::json j = nlohmann::json::parse(modular_to_json(mp));
  CHECK(j["kind"] == "pants");
  CHECK(j["genus"] == 2);
  CHECK(j["p"] == 2);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["edges"].size() == 1);
  CHECK(j["directed"].size() == 2);

  nlohmann::json jc = nlohmann::json::parse(modular_to_json(build_modular_curve_graph(4)));
  CHECK(jc["kind"] == "curve");
  CHECK(jc["vertices"][0]["label"] == "nonseparating");
}

TEST_CASE("kind names round trip") {
  for (auto k : {ModularKind::curve, ModularKind::pants, ModularKind::flip})
    CHECK(modular_kind_from_name(modular_kind_name(k)) == k);
  CHECK_THROWS_AS(modular_kind_from_name("mapping"), DomainError);
}

TEST_CASE("capability caps") {
  CHECK_THROWS_AS(build_modular_pants_graph(8), CapabilityError);   // 14 vertices
  CHECK_THROWS_AS(build_modular_flip_graph(4), CapabilityError);    // 14 triangles
  CHECK_THROWS_AS(build_modular_pants_graph(1), DomainError);
  CHECK_THROWS_AS(build_modular_flip_graph(0), DomainError);
}
