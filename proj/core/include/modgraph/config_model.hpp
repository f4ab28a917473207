// config_model.hpp
// Uniform sampling of half-edge pairings, exact fiber-size counts, and
// seeded Monte Carlo estimators for circuit / automorphism / subgraph
// statistics.  All estimators derive one RNG stream per sample index, so
// results are reproducible and independent of the worker count.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modgraph/bigint.hpp"
#include "modgraph/multigraph.hpp"
#include "modgraph/pairing.hpp"
#include "modgraph/rng.hpp"

namespace modgraph {

// (3N-1)!! = number of perfect matchings on 3N half-edges.
BigInt matching_count(int n_vertices);

// Uniform over all matchings: unbiased shuffle of the 3N half-edges, then
// pair consecutive entries.
Pairing sample_pairing(int n_vertices, SplitMix64& gen);
Pairing sample_pairing(int n_vertices, std::uint64_t seed);

// Exact number of pairings collapsing to this vertex-labeled graph:
//   (3!)^N / ( prod_{u<v} m_uv! * prod_v (loops(v)! * 2^loops(v)) ).
// Each vertex contributes 3! slot assignments; parallel copies of an edge
// are interchangeable, and a loop's two slots can be swapped.
BigInt fiber_size_labeled(const CubicMultigraph& g);

// Number of pairings whose graph is isomorphic to g:
//   (N! / |Aut(g)|) * fiber_size_labeled(g).
BigInt fiber_size_class(const CubicMultigraph& g);

// Integer accumulators from a sampling run.  Means are derived, never
// stored, so merged partials stay exactly consistent.
struct SampleStats {
  int n_vertices = 0;
  long long n_samples = 0;
  std::uint64_t seed = 0;
  int k_max = 0;

  // circuit_histograms[k][v] = number of samples with exactly v k-circuits
  std::map<int, std::vector<long long>> circuit_histograms;
  // sum over samples of (#1-circuits * #2-circuits); used for correlation
  long long cross_sum_12 = 0;

  std::optional<long long> nontrivial_aut_samples;
  std::optional<long long> subgraph_copy_total;

  long long circuit_sum(int k) const;
  double circuit_mean(int k) const;
  // reference limit law: a k-circuit count tends to Poisson(2^k / 2k)
  static double poisson_mean(int k);

  void merge(const SampleStats& other);
};

// Empirical distribution of the k-circuit counts X_1..X_k_max over n_samples
// graphs at the given size.  Requires 1 <= k_max <= 8.
SampleStats estimate_circuit_stats(int n_vertices, int k_max, long long n_samples,
                                   std::uint64_t seed, int workers = 1);

// Same statistics, conditioned on the glued surface having one puncture;
// rejection sampling per sample index.  Requires N == 2 (mod 4).
SampleStats estimate_one_puncture_circuit_stats(int n_vertices, int k_max,
                                                long long n_samples, std::uint64_t seed,
                                                int workers = 1,
                                                long long max_attempts = 1000000);

// Fraction of sampled graphs with a nontrivial automorphism.
double estimate_automorphism_fraction(int n_vertices, long long n_samples,
                                      std::uint64_t seed, int workers = 1);
SampleStats estimate_automorphism_stats(int n_vertices, long long n_samples,
                                        std::uint64_t seed, int workers = 1);

// Mean number of embedded copies of the pattern per sampled graph.
double estimate_subgraph_copy_mean(int n_vertices, const CubicMultigraph& pattern,
                                   long long n_samples, std::uint64_t seed,
                                   int workers = 1);
SampleStats estimate_subgraph_copy_stats(int n_vertices, const CubicMultigraph& pattern,
                                         long long n_samples, std::uint64_t seed,
                                         int workers = 1);

// one row per k: k, count_0..count_max, mean, poisson_mean
std::string stats_to_csv(const SampleStats& s);
std::string stats_to_json(const SampleStats& s);

}  // namespace modgraph
