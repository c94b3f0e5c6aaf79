#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace losslens::rng {

// std::mt19937_64 output is pinned by the standard, so seeded sequences are
// identical across platforms. The std::*_distribution adapters are not, which
// is why the draws below are hand-rolled.
using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable sub-stream seeds: same (seed, label) pair gives the same engine
// everywhere, and distinct labels give independent-looking streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

inline double uniform01(Engine& eng) {  // [0, 1)
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// [0, n). Modulo bias is below n / 2^64, irrelevant at the sizes used here.
inline std::size_t uniform_index(Engine& eng, std::size_t n) {
  return static_cast<std::size_t>(eng() % n);
}

double normal(Engine& eng, double mean = 0.0, double sigma = 1.0);
long binomial(Engine& eng, long n, double p);

}  // namespace losslens::rng
