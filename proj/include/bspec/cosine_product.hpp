#pragma once

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>

namespace bspec {

/// Incremental evaluator of the truncated product  prod_{k=1..K} cos(2 pi t / b^k)
/// with a running certified error bound.
///
/// The bound has two parts. Rounding: each factor contributes a few ulps for
/// cos and the angle, plus argument drift when the repeated division by b is
/// inexact; every multiplication adds one more ulp. Tail: for k > K,
/// |cos(y) - 1| <= y^2 / 2 and |prod (1 - d_k) - 1| <= exp(sum d_k) - 1, with
/// the geometric series summed in closed form.
///
/// Factors whose argument is an exact multiple of 1/4 turn are snapped to
/// their exact values {1, 0, -1, 0}. When the whole division chain was exact
/// a snapped zero is reported through hit_exact_zero().
template <std::floating_point Scalar>
class CosineProduct {
 public:
  CosineProduct(Scalar t, Scalar base) : t_(t), base_(base), x_(t) {}

  /// Multiplies in the next factor.
  void step() {
    constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();
    constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    ++terms_;
    const Scalar next = x_ / base_;
    if (exact_chain_ && std::fma(next, base_, -x_) != Scalar(0)) exact_chain_ = false;
    x_ = next;

    const Scalar frac = std::fmod(x_, Scalar(1));  // exact
    const Scalar four_frac = 4 * frac;             // exact
    Scalar factor;
    Scalar delta = 0;
    if (four_frac == std::trunc(four_frac)) {
      switch (((static_cast<long long>(four_frac) % 4) + 4) % 4) {
        case 0: factor = 1; break;
        case 2: factor = -1; break;
        default: factor = 0; break;
      }
    } else {
      factor = std::cos(two_pi * frac);
      delta = eps * (2 + 2 * two_pi);
    }
    if (!exact_chain_) delta += two_pi * std::fabs(x_) * static_cast<Scalar>(terms_ + 1) * eps;

    if (factor == Scalar(0) && exact_chain_) exact_zero_ = true;
    value_ *= factor;
    rounding_ += delta + eps * std::fabs(value_);
  }

  int terms() const { return terms_; }
  Scalar value() const { return value_; }
  bool hit_exact_zero() const { return exact_zero_; }

  /// Certified bound on |mu_hat(t) - value()| given the factors taken so far.
  Scalar error_bound() const {
    if (exact_zero_) return 0;
    const Scalar tail = tail_log_bound();
    const Scalar growth = std::expm1(tail);
    return rounding_ * (1 + growth) + std::fabs(value_) * growth;
  }

  /// sum_{k > K} (2 pi t)^2 / (2 b^{2k})  in closed form.
  Scalar tail_log_bound() const {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar inv_b2 = 1 / (base_ * base_);
    const Scalar first = std::pow(inv_b2, static_cast<Scalar>(terms_ + 1));
    return 2 * pi * pi * t_ * t_ * first / (1 - inv_b2);
  }

 private:
  Scalar t_;
  Scalar base_;
  Scalar x_;
  Scalar value_ = 1;
  Scalar rounding_ = 0;
  int terms_ = 0;
  bool exact_chain_ = true;
  bool exact_zero_ = false;
};

}  // namespace bspec
