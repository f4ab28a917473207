// config_model.cpp
#include "modgraph/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "json.hpp"
#include "modgraph/combinatorial_map.hpp"
#include "modgraph/errors.hpp"

namespace modgraph {

BigInt matching_count(int n_vertices) {
  if (n_vertices < 2 || n_vertices % 2 != 0)
    throw DomainError("matching_count: N must be even and >= 2");
  BigInt r = 1;
  for (long long m = 3LL * n_vertices - 1; m > 1; m -= 2) r *= m;
  return r;
}

Pairing sample_pairing(int n_vertices, SplitMix64& gen) {
  if (n_vertices < 2 || n_vertices % 2 != 0)
    throw DomainError("sample_pairing: N must be even and >= 2");
  std::vector<int> halves(3 * n_vertices);
  for (int i = 0; i < 3 * n_vertices; ++i) halves[i] = i;
  shuffle(halves, gen);
  Pairing p;
  p.n_vertices = n_vertices;
  p.partner.assign(3 * n_vertices, -1);
  for (size_t i = 0; i < halves.size(); i += 2) {
    p.partner[halves[i]] = halves[i + 1];
    p.partner[halves[i + 1]] = halves[i];
  }
  return p;
}

Pairing sample_pairing(int n_vertices, std::uint64_t seed) {
  SplitMix64 gen(seed);
  return sample_pairing(n_vertices, gen);
}

BigInt fiber_size_labeled(const CubicMultigraph& g) {
  const int n = g.n_vertices();
  BigInt num = big_pow(6, n);
  BigInt den = 1;
  for (int v = 0; v < n; ++v) {
    for (auto [w, m] : g.neighbors(v))
      if (w > v) den *= big_factorial(m);
    if (g.loops(v)) den *= 2;  // loops(v) <= 1, so loops! == 1
  }
  return num / den;
}

BigInt fiber_size_class(const CubicMultigraph& g) {
  const int n = g.n_vertices();
  BigInt labelings = big_factorial(n) / g.automorphism_count();
  return labelings * fiber_size_labeled(g);
}

long long SampleStats::circuit_sum(int k) const {
  auto it = circuit_histograms.find(k);
  if (it == circuit_histograms.end()) throw DomainError("circuit_sum: k not sampled");
  long long s = 0;
  for (size_t v = 0; v < it->second.size(); ++v)
    s += static_cast<long long>(v) * it->second[v];
  return s;
}

double SampleStats::circuit_mean(int k) const {
  if (n_samples == 0) throw DomainError("circuit_mean: empty stats");
  return static_cast<double>(circuit_sum(k)) / static_cast<double>(n_samples);
}

double SampleStats::poisson_mean(int k) {
  if (k < 1) throw DomainError("poisson_mean: k must be >= 1");
  return std::pow(2.0, k) / (2.0 * k);
}

void SampleStats::merge(const SampleStats& other) {
  if (other.n_samples == 0) return;
  n_samples += other.n_samples;
  cross_sum_12 += other.cross_sum_12;
  for (const auto& [k, hist] : other.circuit_histograms) {
    auto& mine = circuit_histograms[k];
    if (mine.size() < hist.size()) mine.resize(hist.size(), 0);
    for (size_t v = 0; v < hist.size(); ++v) mine[v] += hist[v];
  }
  if (other.nontrivial_aut_samples) {
    nontrivial_aut_samples =
        nontrivial_aut_samples.value_or(0) + *other.nontrivial_aut_samples;
  }
  if (other.subgraph_copy_total) {
    subgraph_copy_total = subgraph_copy_total.value_or(0) + *other.subgraph_copy_total;
  }
}

namespace {

// Runs fn(sample_index, per_sample_generator, worker_local_stats) across the
// index range, splitting contiguous chunks over the workers.  RNG streams
// depend only on (seed, index), so the merged totals do not depend on the
// worker count.
SampleStats run_sampler(
    int n_vertices, long long n_samples, std::uint64_t seed, int workers,
    const std::function<void(long long, SplitMix64&, SampleStats&)>& fn) {
  if (n_samples < 1) throw DomainError("sampling requires n_samples >= 1");
  if (workers < 1) workers = 1;
  if (workers > n_samples) workers = static_cast<int>(n_samples);

  std::vector<SampleStats> partial(workers);
  auto work = [&](int w) {
    const long long lo = n_samples * w / workers;
    const long long hi = n_samples * (w + 1) / workers;
    for (long long i = lo; i < hi; ++i) {
      SplitMix64 gen(split_stream(seed, static_cast<std::uint64_t>(i)));
      fn(i, gen, partial[w]);
      partial[w].n_samples += 1;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SampleStats total;
  total.n_vertices = n_vertices;
  total.seed = seed;
  for (const auto& p : partial) total.merge(p);
  return total;
}

void record_hist(SampleStats& s, int k, long long value) {
  auto& hist = s.circuit_histograms[k];
  if (static_cast<long long>(hist.size()) <= value) hist.resize(value + 1, 0);
  hist[value] += 1;
}

}  // namespace

SampleStats estimate_circuit_stats(int n_vertices, int k_max, long long n_samples,
                                   std::uint64_t seed, int workers) {
  if (k_max < 1 || k_max > 8)
    throw DomainError("estimate_circuit_stats: k_max must be in [1, 8]");
  SampleStats s = run_sampler(
      n_vertices, n_samples, seed, workers,
      [&](long long, SplitMix64& gen, SampleStats& acc) {
        CubicMultigraph g = CubicMultigraph::from_pairing(sample_pairing(n_vertices, gen));
        long long x1 = 0, x2 = 0;
        for (int k = 1; k <= k_max; ++k) {
          long long xk = count_circuits(g, k);
          record_hist(acc, k, xk);
          if (k == 1) x1 = xk;
          if (k == 2) x2 = xk;
        }
        if (k_max >= 2) acc.cross_sum_12 += x1 * x2;
      });
  s.k_max = k_max;
  // pad every histogram so all k share bucket 0
  for (int k = 1; k <= k_max; ++k)
    if (s.circuit_histograms[k].empty()) s.circuit_histograms[k].assign(1, 0);
  return s;
}

SampleStats estimate_automorphism_stats(int n_vertices, long long n_samples,
                                        std::uint64_t seed, int workers) {
  SampleStats s = run_sampler(
      n_vertices, n_samples, seed, workers,
      [&](long long, SplitMix64& gen, SampleStats& acc) {
        CubicMultigraph g = CubicMultigraph::from_pairing(sample_pairing(n_vertices, gen));
        if (!acc.nontrivial_aut_samples) acc.nontrivial_aut_samples = 0;
        if (g.automorphism_count() > 1) *acc.nontrivial_aut_samples += 1;
      });
  if (!s.nontrivial_aut_samples) s.nontrivial_aut_samples = 0;
  return s;
}

double estimate_automorphism_fraction(int n_vertices, long long n_samples,
                                      std::uint64_t seed, int workers) {
  SampleStats s = estimate_automorphism_stats(n_vertices, n_samples, seed, workers);
  return static_cast<double>(*s.nontrivial_aut_samples) / static_cast<double>(s.n_samples);
}

SampleStats estimate_subgraph_copy_stats(int n_vertices, const CubicMultigraph& pattern,
                                         long long n_samples, std::uint64_t seed,
                                         int workers) {
  SampleStats s = run_sampler(
      n_vertices, n_samples, seed, workers,
      [&](long long, SplitMix64& gen, SampleStats& acc) {
        CubicMultigraph g = CubicMultigraph::from_pairing(sample_pairing(n_vertices, gen));
        if (!acc.subgraph_copy_total) acc.subgraph_copy_total = 0;
        *acc.subgraph_copy_total += count_subgraph_copies(g, pattern);
      });
  if (!s.subgraph_copy_total) s.subgraph_copy_total = 0;
  return s;
}

double estimate_subgraph_copy_mean(int n_vertices, const CubicMultigraph& pattern,
                                   long long n_samples, std::uint64_t seed, int workers) {
  SampleStats s = estimate_subgraph_copy_stats(n_vertices, pattern, n_samples, seed, workers);
  return static_cast<double>(*s.subgraph_copy_total) / static_cast<double>(s.n_samples);
}

SampleStats estimate_one_puncture_circuit_stats(int n_vertices, int k_max,
                                                long long n_samples, std::uint64_t seed,
                                                int workers, long long max_attempts) {
  if (k_max < 1 || k_max > 8)
    throw DomainError("estimate_one_puncture_circuit_stats: k_max must be in [1, 8]");
  if (n_vertices % 4 != 2)
    throw DomainError(
        "estimate_one_puncture_circuit_stats: one puncture requires N == 2 (mod 4), got N = " +
        std::to_string(n_vertices));
  SampleStats s = run_sampler(
      n_vertices, n_samples, seed, workers,
      [&](long long i, SplitMix64&, SampleStats& acc) {
        CombinatorialMap m = sample_one_puncture(
            n_vertices, split_stream(seed, static_cast<std::uint64_t>(i)), max_attempts);
        CubicMultigraph g = dual_graph(m);
        long long x1 = 0, x2 = 0;
        for (int k = 1; k <= k_max; ++k) {
          long long xk = count_circuits(g, k);
          record_hist(acc, k, xk);
          if (k == 1) x1 = xk;
          if (k == 2) x2 = xk;
        }
        if (k_max >= 2) acc.cross_sum_12 += x1 * x2;
      });
  s.k_max = k_max;
  for (int k = 1; k <= k_max; ++k)
    if (s.circuit_histograms[k].empty()) s.circuit_histograms[k].assign(1, 0);
  return s;
}

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

std::string stats_to_csv(const SampleStats& s) {
  size_t width = 1;
  for (const auto& [k, hist] : s.circuit_histograms) width = std::max(width, hist.size());
  std::string out = "k";
  for (size_t v = 0; v < width; ++v) out += ",count_" + std::to_string(v);
  out += ",mean,poisson_mean\n";
  for (const auto& [k, hist] : s.circuit_histograms) {
    out += std::to_string(k);
    for (size_t v = 0; v < width; ++v)
      out += "," + std::to_string(v < hist.size() ? hist[v] : 0LL);
    out += "," + fmt_double(s.circuit_mean(k));
    out += "," + fmt_double(SampleStats::poisson_mean(k));
    out += "\n";
  }
  return out;
}

std::string stats_to_json(const SampleStats& s) {
  nlohmann::ordered_json j;
  j["n_vertices"] = s.n_vertices;
  j["n_samples"] = s.n_samples;
  j["seed"] = s.seed;
  if (!s.circuit_histograms.empty()) {
    nlohmann::ordered_json hists = nlohmann::ordered_json::object();
    nlohmann::ordered_json means = nlohmann::ordered_json::object();
    nlohmann::ordered_json refs = nlohmann::ordered_json::object();
    for (const auto& [k, hist] : s.circuit_histograms) {
      hists[std::to_string(k)] = hist;
      means[std::to_string(k)] = s.circuit_mean(k);
      refs[std::to_string(k)] = SampleStats::poisson_mean(k);
    }
    j["circuit_histograms"] = hists;
    j["circuit_means"] = means;
    j["poisson_means"] = refs;
    j["cross_sum_12"] = s.cross_sum_12;
  }
  if (s.nontrivial_aut_samples) {
    j["nontrivial_aut_samples"] = *s.nontrivial_aut_samples;
    j["automorphism_fraction"] =
        static_cast<double>(*s.nontrivial_aut_samples) / static_cast<double>(s.n_samples);
  }
  if (s.subgraph_copy_total) {
    j["subgraph_copy_total"] = *s.subgraph_copy_total;
    j["subgraph_copy_mean"] =
        static_cast<double>(*s.subgraph_copy_total) / static_cast<double>(s.n_samples);
  }
  return j.dump(2) + "\n";
}

}  // namespace modgraph
