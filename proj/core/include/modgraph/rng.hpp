// rng.hpp
// Seeded counter-based randomness. All estimators derive one stream per sample
// index via split_stream(master, i), so aggregated results are reproducible and
// independent of worker count and scheduling. Do not change the mixing
// constants: frozen statistical expectations in the test suite depend on them.
#pragma once

#include <cstdint>
#include <vector>

namespace modgraph {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// Independent stream for sample `index` under a master seed.
inline uint64_t split_stream(uint64_t seed, uint64_t index) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
  g.next();
  return g.next();
}

// Unbiased integer in [0, n). Rejection keeps the distribution exact.
inline uint64_t uniform_below(SplitMix64& g, uint64_t n) {
  uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    uint64_t r = g.next();
    if (r >= threshold) return r % n;
  }
}

// Fisher-Yates, unbiased given uniform_below.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& g) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(uniform_below(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace modgraph
