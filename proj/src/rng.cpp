#include "losslens/rng.hpp"

#include <cmath>

namespace losslens::rng {

namespace {
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  return splitmix64(splitmix64(seed) ^ fnv1a(label));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0x9e3779b97f4a7c15ULL + 1));
}

double normal(Engine& eng, double mean, double sigma) {
  // Box-Muller; two uniforms per draw, no cached spare.
  double u1 = uniform01(eng);
  while (u1 <= 0.0) u1 = uniform01(eng);
  const double u2 = uniform01(eng);
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  return mean + sigma * z;
}

long binomial(Engine& eng, long n, double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;
  long hits = 0;
  for (long i = 0; i < n; ++i) {
    if (uniform01(eng) < p) ++hits;
  }
  return hits;
}

}  // namespace losslens::rng
