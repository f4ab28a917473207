// test_config_model.cpp
// The exact counting layer (matching counts, fiber sizes, the mass identity)
// and the seeded estimators.  Estimator checks compare against exact finite-N
// expectations: E[X_1] = E[X_2] = 3N/(3N-1), E[X_3] = 12N(N-2)/((3N-1)(3N-5)),
// E[#triple-edge copies] = 3N(N-1)/((3N-1)(3N-3)(3N-5)), and for K_4
// C(N,4)*1296/prod_{i<6}(3N-1-2i).  Bands are 5 sigma with Poisson variance
// as proxy; every run is seeded, so a green check is reproducible.
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "modgraph/config_model.hpp"
#include "modgraph/enumeration.hpp"
#include "modgraph/errors.hpp"
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

}  // namespace

TEST_CASE("matching counts are the double factorials") {
  CHECK(matching_count(2) == BigInt(15));
  CHECK(matching_count(4) == BigInt(10395));
  CHECK(matching_count(6) == BigInt(34459425));
  CHECK_THROWS_AS(matching_count(3), DomainError);
  CHECK_THROWS_AS(matching_count(0), DomainError);
}

TEST_CASE("labeled fiber sizes of the small shapes") {
  CHECK(fiber_size_labeled(triple_edge()) == BigInt(6));
  CHECK(fiber_size_labeled(dumbbell()) == BigInt(9));
  CHECK(fiber_size_labeled(k4()) == BigInt(1296));
}

TEST_CASE("class fibers tile the matching space at N = 2") {
  // 2 classes, both rigid up to the vertex swap: 6 + 9 = 15
  CHECK(fiber_size_class(triple_edge()) == BigInt(6));
  CHECK(fiber_size_class(dumbbell()) == BigInt(9));
  CHECK(fiber_size_class(triple_edge()) + fiber_size_class(dumbbell()) == matching_count(2));
}

TEST_CASE("labeled fibers match the exhaustive scan at N = 4") {
  std::vector<LabeledFiber> fibers = brute_force_labeled_fibers(4);
  CHECK(fibers.size() == 47);
  BigInt total = 0;
  std::map<std::string, std::pair<long long, BigInt>> by_class;  // labelings, matchings
  std::map<std::string, CubicMultigraph> rep;
  for (const auto& f : fibers) {
    CHECK(fiber_size_labeled(f.graph) == BigInt(f.matchings));
    total += BigInt(f.matchings);
    auto& slot = by_class[f.graph.canonical_code()];
    slot.first += 1;
    slot.second += BigInt(f.matchings);
    rep.emplace(f.graph.canonical_code(), f.graph);
  }
  CHECK(total == matching_count(4));
  CHECK(by_class.size() == 8);  // 5 connected + 3 two-component classes
  for (const auto& [code, slot] : by_class)
    CHECK(fiber_size_class(rep.at(code)) == slot.second);
}

TEST_CASE("sampled pairings are uniform at N = 2") {
  // chi^2 over the 15 matchings; threshold = 36.123 (14 dof, p = 0.001)
  const long long S = 100000;
  std::map<std::vector<std::pair<int, int>>, long long> counts;
  for (long long i = 0; i < S; ++i) {
    SplitMix64 gen(split_stream(91, static_cast<std::uint64_t>(i)));
    counts[pairing_pairs(sample_pairing(2, gen))] += 1;
  }
  CHECK(counts.size() == 15);
  const double expected = static_cast<double>(S) / 15.0;
  double chi2 = 0.0;
  for (const auto& [key, c] : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 36.123);
}

TEST_CASE("circuit means match the exact finite-N values") {
  const int N = 10;
  const long long S = 200000;
  SampleStats st = estimate_circuit_stats(N, 3, S, 7);
  const double e1 = 3.0 * N / (3.0 * N - 1);
  const double e3 = 12.0 * N * (N - 2) / ((3.0 * N - 1) * (3.0 * N - 5));
  CHECK(std::abs(st.circuit_mean(1) - e1) < 5.0 * std::sqrt(e1 / S));
  CHECK(std::abs(st.circuit_mean(2) - e1) < 5.0 * std::sqrt(e1 / S));
  CHECK(std::abs(st.circuit_mean(3) - e3) < 5.0 * std::sqrt(e3 / S));
  CHECK(st.circuit_sum(1) == static_cast<long long>(st.circuit_mean(1) * S + 0.5));
}

TEST_CASE("poisson reference means") {
  CHECK(SampleStats::poisson_mean(1) == doctest::Approx(1.0));
  CHECK(SampleStats::poisson_mean(2) == doctest::Approx(1.0));
  CHECK(SampleStats::poisson_mean(3) == doctest::Approx(4.0 / 3.0));
  CHECK(SampleStats::poisson_mean(4) == doctest::Approx(2.0));
  CHECK_THROWS_AS(SampleStats::poisson_mean(0), DomainError);
}

TEST_CASE("every graph at N = 2 has a nontrivial automorphism") {
  CHECK(estimate_automorphism_fraction(2, 2000, 13) == doctest::Approx(1.0));
}

TEST_CASE("estimates are independent of the worker count") {
  SampleStats a = estimate_circuit_stats(20, 4, 2000, 55, 1);
  SampleStats b = estimate_circuit_stats(20, 4, 2000, 55, 3);
  CHECK(stats_to_csv(a) == stats_to_csv(b));
  CHECK(a.cross_sum_12 == b.cross_sum_12);
  SampleStats c = estimate_one_puncture_circuit_stats(6, 2, 400, 56, 1);
  SampleStats d = estimate_one_puncture_circuit_stats(6, 2, 400, 56, 2);
  CHECK(stats_to_csv(c) == stats_to_csv(d));
}

TEST_CASE("subgraph copy means match exact expectations") {
  {
    const int N = 10;
    const long long S = 100000;
    const double ex = 3.0 * N * (N - 1) / ((3.0 * N - 1) * (3.0 * N - 3) * (3.0 * N - 5));
    const double m = estimate_subgraph_copy_mean(N, triple_edge(), S, 5150);
    CHECK(std::abs(m - ex) < 5.0 * std::sqrt(ex / S));
  }
  {
    const int N = 6;
    const long long S = 200000;
    double den = 1.0;
    for (int i = 0; i < 6; ++i) den *= (3.0 * N - 1 - 2 * i);
    const double ex = 15.0 * 1296.0 / den;  // C(6,4) = 15
    const double m = estimate_subgraph_copy_mean(N, k4(), S, 5151);
    CHECK(std::abs(m - ex) < 5.0 * std::sqrt(ex / S));
  }
}

TEST_CASE("copy counts of a dense pattern decay with N") {
  // E[#theta copies] = 3N(N-1)/((3N-1)(3N-3)(3N-5)) ~ 1/(3N): plenty of hits
  // at 1e4 samples, so the decay holds with a wide margin at a pinned seed
  CubicMultigraph theta = triple_edge();
  const double m50 = estimate_subgraph_copy_mean(50, theta, 10000, 303);
  const double m200 = estimate_subgraph_copy_mean(200, theta, 10000, 303);
  CHECK(m50 > m200);
  CHECK(m200 >= 0.0);
}

TEST_CASE("one-puncture conditioning changes the loop statistic") {
  // a same-triangle gluing folds off its own boundary walk, so one-puncture
  // surfaces never carry dual loops: X_1 is identically zero
  SampleStats st = estimate_one_puncture_circuit_stats(6, 2, 300, 90);
  CHECK(st.circuit_sum(1) == 0);
  CHECK(st.circuit_mean(2) > 0.0);
  CHECK(st.n_samples == 300);
}

TEST_CASE("one-puncture stats reject N != 2 mod 4") {
  CHECK_THROWS_AS(estimate_one_puncture_circuit_stats(4, 2, 10, 1), DomainError);
  CHECK_THROWS_AS(estimate_one_puncture_circuit_stats(8, 2, 10, 1), DomainError);
  CHECK_THROWS_WITH_AS(estimate_one_puncture_circuit_stats(12, 2, 10, 1),
                       doctest::Contains("got N = 12"), DomainError);
}

TEST_CASE("estimator argument validation") {
  CHECK_THROWS_AS(estimate_circuit_stats(10, 0, 10, 1), DomainError);
  CHECK_THROWS_AS(estimate_circuit_stats(10, 9, 10, 1), DomainError);
  CHECK_THROWS_AS(estimate_circuit_stats(7, 2, 10, 1), DomainError);
  CHECK_THROWS_AS(estimate_circuit_stats(10, 2, 0, 1), DomainError);
}

TEST_CASE("stats serialize to parseable CSV and JSON") {
  SampleStats st = estimate_circuit_stats(12, 3, 500, 77);
  std::string csv = stats_to_csv(st);
  CHECK(csv.rfind("k,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + one row per k
  nlohmann::json j = nlohmann::json::parse(stats_to_json(st));
  CHECK(j["n_vertices"] == 12);
  CHECK(j["n_samples"] == 500);
  CHECK(j["seed"] == 77);
  CHECK(j["circuit_histograms"].size() == 3);
  CHECK(j["circuit_means"].size() == 3);
}
