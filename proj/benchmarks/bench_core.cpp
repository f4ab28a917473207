// bench_core.cpp
// Microbenchmarks over the hot paths: sampling, canonicalization,
// automorphism counting, circuit statistics, flips, enumeration, exact genus,
// and the modular graph builds.  Run manually; not part of ctest.
#include <benchmark/benchmark.h>

#include "modgraph/combinatorial_map.hpp"
#include "modgraph/config_model.hpp"
#include "modgraph/enumeration.hpp"
#include "modgraph/genus_search.hpp"
#include "modgraph/modular_graphs.hpp"
#include "modgraph/moves.hpp"
#include "modgraph/multigraph.hpp"
#include "modgraph/rng.hpp"
#include "modgraph/simple_graph.hpp"

namespace {

using namespace modgraph;

void BM_SamplePairing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 gen(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_pairing(n, gen));
}
BENCHMARK(BM_SamplePairing)->Arg(20)->Arg(100)->Arg(200);

void BM_CollapseToGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 gen(2);
  Pairing p = sample_pairing(n, gen);
  for (auto _ : state) benchmark::DoNotOptimize(CubicMultigraph::from_pairing(p));
}
BENCHMARK(BM_CollapseToGraph)->Arg(20)->Arg(100)->Arg(200);

void BM_CanonicalCode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 gen(3);
  CubicMultigraph g = CubicMultigraph::from_pairing(sample_pairing(n, gen));
  for (auto _ : state) {
    CubicMultigraph copy = g;  // the code is cached per object
    benchmark::DoNotOptimize(copy.canonical_code());
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(12)->Arg(20);

void BM_AutomorphismCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 gen(4);
  CubicMultigraph g = CubicMultigraph::from_pairing(sample_pairing(n, gen));
  for (auto _ : state) benchmark::DoNotOptimize(g.automorphism_count());
}
BENCHMARK(BM_AutomorphismCount)->Arg(20)->Arg(100)->Arg(200);

void BM_CountCircuits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 gen(5);
  CubicMultigraph g = CubicMultigraph::from_pairing(sample_pairing(n, gen));
  for (auto _ : state)
    for (int k = 1; k <= 3; ++k) benchmark::DoNotOptimize(count_circuits(g, k));
}
BENCHMARK(BM_CountCircuits)->Arg(100)->Arg(200);

void BM_SampleOnePuncture(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_one_puncture(6, seed++));
}
BENCHMARK(BM_SampleOnePuncture);

void BM_Flip(benchmark::State& state) {
  CombinatorialMap m = sample_one_puncture(6, 11);
  const auto arcs = map_arcs(m);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(flip(m, arcs[i].first));
    i = (i + 1) % arcs.size();
  }
}
BENCHMARK(BM_Flip);

void BM_EnumerateClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cubic_multigraphs(n));
}
BENCHMARK(BM_EnumerateClasses)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExactGenusK5(benchmark::State& state) {
  const SimpleGraph g = complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(exact_graph_genus(g));
}
BENCHMARK(BM_ExactGenusK5)->Unit(benchmark::kMillisecond);

void BM_BuildModularPants(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_modular_pants_graph(g));
}
BENCHMARK(BM_BuildModularPants)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
