#include "bspec/exact_arith.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bspec/cosine_product.hpp"

namespace bspec {

namespace {

constexpr int kMaxAdaptiveTerms = 4096;

std::uint64_t magnitude_of(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

// cos(2 pi q / 4) for integer q.
int quarter_turn_cosine(std::int64_t q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return 1;
    case 2: return -1;
    default: return 0;
  }
}

MuHatValue from_numeric(int exact_sign, double v, double bound) {
  MuHatValue r;
  r.sign = exact_sign * (v < 0 ? -1 : 1);
  r.magnitude = std::fabs(v);
  r.error_bound = bound;
  return r;
}

}  // namespace

bool in_zero_set(QuarterInt t, const BernoulliParams& params) {
  if (t.is_zero()) return false;
  const std::uint64_t x = magnitude_of(t.quarters());
  const auto base = static_cast<std::uint64_t>(params.base());
  const int s = std::countr_zero(base);
  const std::uint64_t u = base >> s;

  const int a = std::countr_zero(x);
  if (a % s != 0) return false;
  const int k = a / s;
  if (k < 1) return false;

  const std::uint64_t odd = x >> a;
  std::uint64_t power = 1;
  for (int i = 0; i < k; ++i) {
    if (power > odd / u) return false;  // u^k already exceeds the odd part
    power *= u;
  }
  return odd % power == 0;
}

std::optional<Reduction> reduce_step(QuarterInt t, const BernoulliParams& params) {
  const std::int64_t base = params.base();
  if (t.quarters() % base != 0) return std::nullopt;
  const std::int64_t q = t.quarters() / base;
  return Reduction{quarter_turn_cosine(q), QuarterInt::from_quarters(q)};
}

Reduction reduce_argument(QuarterInt t, const BernoulliParams& params) {
  Reduction acc{1, t};
  while (!acc.reduced.is_zero()) {
    auto step = reduce_step(acc.reduced, params);
    if (!step) break;
    if (step->sign == 0) return Reduction{0, acc.reduced};
    acc.sign *= step->sign;
    acc.reduced = step->reduced;
  }
  return acc;
}

MuHatValue mu_hat_product(double t, const BernoulliParams& params, int terms) {
  if (terms < 1) throw std::invalid_argument("mu_hat_product: terms must be >= 1");
  CosineProduct<double> product(t, static_cast<double>(params.base()));
  for (int k = 0; k < terms; ++k) {
    product.step();
    if (product.hit_exact_zero()) return MuHatValue::zero();
  }
  return from_numeric(1, product.value(), product.error_bound());
}

MuHatValue mu_hat_numeric(double t, const BernoulliParams& params, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("mu_hat: tol must be positive");
  CosineProduct<double> product(t, static_cast<double>(params.base()));
  double best_bound = std::numeric_limits<double>::infinity();
  while (product.terms() < kMaxAdaptiveTerms) {
    product.step();
    if (product.hit_exact_zero()) return MuHatValue::zero();
    const double bound = product.error_bound();
    if (bound <= tol) break;
    // Tail exhausted: more factors only add rounding.
    if (product.tail_log_bound() < std::numeric_limits<double>::epsilon() * 1e-3 && bound >= best_bound)
      break;
    best_bound = std::min(best_bound, bound);
  }
  return from_numeric(1, product.value(), product.error_bound());
}

MuHatValue mu_hat(QuarterInt t, const BernoulliParams& params, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("mu_hat: tol must be positive");
  if (in_zero_set(t, params)) return MuHatValue::zero();
  const Reduction r = reduce_argument(t, params);
  if (r.sign == 0) return MuHatValue::zero();
  if (r.reduced.is_zero()) return MuHatValue::exact(r.sign);
  MuHatValue v = mu_hat_numeric(r.reduced.to_double(), params, tol);
  v.sign *= r.sign;
  return v;
}

ChaosEstimate chaos_game_estimate(double t, const BernoulliParams& params, std::size_t samples,
                                  std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("chaos_game_estimate: samples must be >= 1");
  const double lambda = params.lambda();
  const double base = static_cast<double>(params.base());
  // lambda^depth <= 2^-60; at most 60 coin flips, one 64-bit draw per sample.
  const int depth = static_cast<int>(std::ceil(60.0 * std::numbers::ln2 / std::log(base)));
  const double two_pi_t = 2.0 * std::numbers::pi * t;

  std::mt19937_64 rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    std::uint64_t flips = rng();
    double x = 0.0;
    for (int k = 0; k < depth; ++k) {
      x = lambda * (x + ((flips & 1u) ? 1.0 : -1.0));
      flips >>= 1;
    }
    const double y = std::cos(two_pi_t * x);
    const double delta = y - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (y - mean);
  }
  ChaosEstimate out;
  out.estimate = mean;
  out.samples = samples;
  out.std_error = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples))
                              : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace bspec
