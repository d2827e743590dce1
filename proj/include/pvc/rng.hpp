#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

// Seeded randomness helpers. All randomized routines in this library draw
// through these primitives rather than <random> distributions, whose output
// is implementation-defined; mt19937_64 itself is specified bit-exactly, so
// results are reproducible across standard libraries.

namespace pvc {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Child seed for run `index` under a master seed. Runs are independent of
// how many siblings exist, so a schedule's prefix is stable as the run
// count grows.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + 0x9e3779b97f4a7c15ull * (index + 1));
}

// Unbiased draw from [0, n). Rejection sampling on the raw engine output.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t min = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = rng();
  while (x < min) x = rng();
  return x % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle_seeded(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

}  // namespace pvc
