#pragma once

// Independent reference implementations used by the tests. Deliberately naive.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

// t in Z  <=>  4t = (2n)^k (2m+1) for some k >= 1.
inline bool in_zero_set(std::int64_t quarters, int n) {
  if (quarters == 0) return false;
  const std::int64_t b = 2 * n;
  std::int64_t power = b;
  while (true) {
    if (quarters % power != 0) return false;
    if ((quarters / power) % 2 != 0) return true;
    if (power > INT64_MAX / b) return false;
    power *= b;
  }
}

// Long-double product with many more factors than any caller needs.
inline long double mu_hat(long double t, int n, int terms = 400) {
  long double scale = 1.0L;
  long double prod = 1.0L;
  for (int k = 1; k <= terms; ++k) {
    scale /= 2.0L * n;
    prod *= std::cos(2.0L * std::numbers::pi_v<long double> * t * scale);
  }
  return prod;
}

// Gamma element sum_i b_i (2n)^i times n/2, returned in quarters.
inline std::int64_t word_quarters(std::uint64_t bits, int n) {
  std::int64_t sum = 0, power = 1;
  for (; bits; bits >>= 1, power *= 2 * n)
    if (bits & 1u) sum += power;
  return 2 * n * sum;
}

// Plain random walk through the maps x -> lambda (x +- 1).
inline double chaos_game(double t, int n, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const double lambda = 1.0 / (2.0 * n);
  double acc = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    double x = 0;
    for (int i = 0; i < 64; ++i) x = lambda * (x + (coin(rng) ? 1.0 : -1.0));
    acc += std::cos(2 * std::numbers::pi * t * x);
  }
  return acc / static_cast<double>(samples);
}

}  // namespace oracle
