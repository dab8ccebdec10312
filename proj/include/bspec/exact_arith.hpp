#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "bspec/params.hpp"
#include "bspec/quarter_int.hpp"

namespace bspec {

/// Certified value of the Fourier transform of mu.
///
/// The represented number v satisfies |v - sign * magnitude| <= error_bound.
/// exact_zero is decided arithmetically, never from a magnitude threshold.
struct MuHatValue {
  bool exact_zero = false;
  int sign = 1;  // -1 or +1
  double magnitude = 0.0;
  double error_bound = 0.0;

  double value() const { return sign * magnitude; }

  static MuHatValue zero() { return MuHatValue{true, 1, 0.0, 0.0}; }
  static MuHatValue exact(int sign) { return MuHatValue{false, sign, 1.0, 0.0}; }
};

/// True iff t lies in the zero set {(2n)^k (2m+1) / 4 : k >= 1, m in Z}.
///
/// With 2n = 2^s u (u odd): 4t must have 2-adic valuation s*k for some k >= 1
/// and its odd part must be divisible by u^k.
bool in_zero_set(QuarterInt t, const BernoulliParams& params);

/// mu_hat(t) = sign * mu_hat(reduced). sign is 0 when a vanishing cosine
/// factor was met, in which case `reduced` is the argument whose first
/// factor vanishes.
struct Reduction {
  int sign = 1;
  QuarterInt reduced;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// One application of mu_hat(2n s) = cos(2 pi s) mu_hat(s): returns
/// (cos(2 pi s), s) when s = t / 2n is still a quarter-integer, else nullopt.
std::optional<Reduction> reduce_step(QuarterInt t, const BernoulliParams& params);

/// Applies reduce_step until it no longer applies or a zero factor appears.
Reduction reduce_argument(QuarterInt t, const BernoulliParams& params);

/// Truncated product over k = 1..terms at a real argument, with certified
/// tail and rounding bound. Throws std::invalid_argument for terms < 1.
MuHatValue mu_hat_product(double t, const BernoulliParams& params, int terms);

/// Numeric evaluation at a real argument, with the number of factors chosen
/// adaptively until error_bound <= tol (or the rounding floor is reached).
MuHatValue mu_hat_numeric(double t, const BernoulliParams& params, double tol);

/// Exact zero/sign decision followed by numeric evaluation of the reduced
/// argument. Throws std::invalid_argument unless tol > 0.
MuHatValue mu_hat(QuarterInt t, const BernoulliParams& params, double tol);

struct ChaosEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Monte-Carlo estimate of mu_hat(t) by the chaos game: each sample runs the
/// maps x -> (x +- 1) / 2n with fair coin flips until the remaining
/// contraction is below 2^-60, then cos(2 pi t x) is averaged. Deterministic
/// for a fixed seed. Throws std::invalid_argument for samples = 0.
ChaosEstimate chaos_game_estimate(double t, const BernoulliParams& params, std::size_t samples,
                                  std::uint64_t seed);

}  // namespace bspec
