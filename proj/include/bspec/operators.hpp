#pragma once

#include <optional>
#include <vector>

#include "bspec/exact_arith.hpp"
#include "bspec/params.hpp"
#include "bspec/report.hpp"
#include "bspec/spectrum.hpp"

namespace bspec {

// Cuntz isometries on the canonical basis e_gamma, acting as digit shifts.

/// S0 e_gamma = e_{2n gamma}: prepends digit 0.
DigitWord apply_s0(DigitWord w);
/// S1 e_gamma = e_{n/2 + 2n gamma}: prepends digit 1.
DigitWord apply_s1(DigitWord w);
/// S0*: strips a leading 0 digit (e_0 is fixed); nullopt is the zero vector.
std::optional<DigitWord> apply_s0_adj(DigitWord w);
/// S1*: strips a leading 1 digit; nullopt is the zero vector.
std::optional<DigitWord> apply_s1_adj(DigitWord w);

/// Exhaustive check on all words of length <= max_digits of
/// Si* Sj = delta_ij I and S0 S0* + S1 S1* = I, plus the value-level
/// definitions of S0, S1 and the adjoint identity <Si e_w, e_v> = <e_w, Si* e_v>
/// decided through the zero-set predicate.
VerificationReport verify_cuntz(const BernoulliParams& params, int max_digits);

struct CoeffTerm {
  DigitWord word;
  double coefficient = 0.0;
  double error_bound = 0.0;
};

/// Finitely supported expansion in the canonical basis. Exact zeros are never
/// stored. residual_bound is an upper bound on the squared norm lying outside
/// the truncation (Bessel deficit).
class CoeffVector {
 public:
  /// Appends a term; exact zeros are dropped.
  void add(DigitWord word, const MuHatValue& value);
  void add(DigitWord word, double coefficient, double error_bound);

  const std::vector<CoeffTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// 0 when the word is not in the support.
  double coefficient(DigitWord word) const;
  bool contains(DigitWord word) const;

  double norm_squared() const;
  /// Sum of error bounds propagated to the squared norm.
  double norm_squared_error() const;

  double residual_bound() const { return residual_bound_; }
  void set_residual_bound(double r) { residual_bound_ = r; }

  /// residual = max(0, 1 - sum (|c| - err)_+^2), the unit-norm deficit.
  void close_as_unit_vector();

 private:
  std::vector<CoeffTerm> terms_;
  double residual_bound_ = 0.0;
};

/// U e_gamma = e_{p gamma} expanded in the canonical basis over all words of
/// length <= max_digits. A single exact term when p gamma is itself in the
/// spectrum. Throws std::invalid_argument without p or with tol <= 0.
CoeffVector apply_u(DigitWord gamma, const BernoulliParams& params, int max_digits, double tol);

/// Coefficients <e_gamma, e_t> = mu_hat(t - gamma) over the truncation.
CoeffVector expand_exponential(QuarterInt t, const BernoulliParams& params, int max_digits, double tol);
/// Real-argument form; routed to the exact path when 4t is an integer.
CoeffVector expand_exponential(double t, const BernoulliParams& params, int max_digits, double tol);

enum class Basis { canonical, scaled };

struct ParsevalSum {
  double sum = 0.0;
  double error_bound = 0.0;
};

/// sum over words of length <= max_digits of |mu_hat(t - b gamma)|^2 with
/// b = 1 (canonical) or p (scaled).
ParsevalSum parseval_partial(double t, Basis basis, const BernoulliParams& params, int max_digits, double tol);

/// Partial sums for every digit length 0..max_digits in one pass. Entry d
/// equals parseval_partial(t, basis, params, d, tol) bit for bit.
std::vector<ParsevalSum> parseval_table(double t, Basis basis, const BernoulliParams& params, int max_digits,
                                        double tol);

}  // namespace bspec
