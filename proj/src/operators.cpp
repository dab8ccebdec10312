#include "bspec/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bspec {

namespace {

constexpr int kMaxPairwiseDigits = 10;

void require_tol(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
}

std::string show(const std::optional<DigitWord>& w) { return w ? "e[" + w->to_string() + "]" : "0"; }

// <e_a, e_b> for spectrum points: 1 if equal, otherwise 0 exactly when the
// difference is in the zero set. Returns nullopt if neither holds.
std::optional<int> basis_inner_product(QuarterInt a, QuarterInt b, const BernoulliParams& params) {
  if (a == b) return 1;
  if (in_zero_set(b - a, params)) return 0;
  return std::nullopt;
}

}  // namespace

DigitWord apply_s0(DigitWord w) {
  if (w.length() >= DigitWord::kMaxDigits) throw std::length_error("apply_s0: word too long");
  return DigitWord::from_bits(w.bits() << 1);
}

DigitWord apply_s1(DigitWord w) {
  if (w.length() >= DigitWord::kMaxDigits) throw std::length_error("apply_s1: word too long");
  return DigitWord::from_bits((w.bits() << 1) | 1u);
}

std::optional<DigitWord> apply_s0_adj(DigitWord w) {
  if (w.digit(0) != 0) return std::nullopt;
  return DigitWord::from_bits(w.bits() >> 1);
}

std::optional<DigitWord> apply_s1_adj(DigitWord w) {
  if (w.digit(0) != 1) return std::nullopt;
  return DigitWord::from_bits(w.bits() >> 1);
}

VerificationReport verify_cuntz(const BernoulliParams& params, int max_digits) {
  if (max_digits < 1) throw std::invalid_argument("verify_cuntz: max_digits must be >= 1");
  VerificationReport report;
  report.suite = "cuntz";
  const auto words = enumerate_gamma(max_digits, Ordering::value_ascending);
  const QuarterInt half_n = QuarterInt::from_quarters(2 * static_cast<std::int64_t>(params.n()));

  for (const DigitWord w : words) {
    const QuarterInt value = word_value(w, params);
    const DigitWord s0w = apply_s0(w);
    const DigitWord s1w = apply_s1(w);

    report.record(word_value(s0w, params) == params.base() * value,
                  [&] { return "S0 e[" + w.to_string() + "] is not e_{2n gamma}"; });
    report.record(word_value(s1w, params) == half_n + params.base() * value,
                  [&] { return "S1 e[" + w.to_string() + "] is not e_{n/2 + 2n gamma}"; });

    report.record(apply_s0_adj(s0w) == w, [&] { return "S0*S0 e[" + w.to_string() + "] != e"; });
    report.record(apply_s1_adj(s1w) == w, [&] { return "S1*S1 e[" + w.to_string() + "] != e"; });
    report.record(!apply_s0_adj(s1w), [&] { return "S0*S1 e[" + w.to_string() + "] = " + show(apply_s0_adj(s1w)); });
    report.record(!apply_s1_adj(s0w), [&] { return "S1*S0 e[" + w.to_string() + "] = " + show(apply_s1_adj(s0w)); });

    // S0 S0* e + S1 S1* e = e: exactly one range projection keeps e_w.
    std::optional<DigitWord> p0, p1;
    if (auto a = apply_s0_adj(w)) p0 = apply_s0(*a);
    if (auto a = apply_s1_adj(w)) p1 = apply_s1(*a);
    const bool partition = (p0.has_value() != p1.has_value()) && (p0 ? *p0 : *p1) == w;
    report.record(partition, [&] {
      return "S0S0* + S1S1* on e[" + w.to_string() + "] gives " + show(p0) + " + " + show(p1);
    });
  }

  if (max_digits <= kMaxPairwiseDigits) {
    // Adjoint identity, with both sides decided by exact orthogonality.
    for (const DigitWord w : words) {
      const QuarterInt image[2] = {word_value(apply_s0(w), params), word_value(apply_s1(w), params)};
      for (const DigitWord v : words) {
        const QuarterInt v_value = word_value(v, params);
        const std::optional<DigitWord> adj[2] = {apply_s0_adj(v), apply_s1_adj(v)};
        for (int i = 0; i < 2; ++i) {
          const auto lhs = basis_inner_product(image[i], v_value, params);
          const int rhs = (adj[i] && *adj[i] == w) ? 1 : 0;
          report.record(lhs && *lhs == rhs, [&] {
            return "<S" + std::to_string(i) + " e[" + w.to_string() + "], e[" + v.to_string() +
                   "]> != <e, S" + std::to_string(i) + "* e>";
          });
        }
      }
    }
  } else {
    report.notes.push_back("adjoint pair check skipped above " + std::to_string(kMaxPairwiseDigits) + " digits");
  }
  return report;
}

void CoeffVector::add(DigitWord word, const MuHatValue& value) {
  if (value.exact_zero) return;
  terms_.push_back(CoeffTerm{word, value.value(), value.error_bound});
}

void CoeffVector::add(DigitWord word, double coefficient, double error_bound) {
  terms_.push_back(CoeffTerm{word, coefficient, error_bound});
}

double CoeffVector::coefficient(DigitWord word) const {
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const CoeffTerm& t) { return t.word == word; });
  return it == terms_.end() ? 0.0 : it->coefficient;
}

bool CoeffVector::contains(DigitWord word) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const CoeffTerm& t) { return t.word == word; });
}

double CoeffVector::norm_squared() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.coefficient * t.coefficient;
  return s;
}

double CoeffVector::norm_squared_error() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.error_bound * (2.0 * std::fabs(t.coefficient) + t.error_bound);
  return s;
}

void CoeffVector::close_as_unit_vector() {
  double captured = 0.0;
  for (const auto& t : terms_) {
    const double low = std::max(0.0, std::fabs(t.coefficient) - t.error_bound);
    captured += low * low;
  }
  residual_bound_ = std::max(0.0, 1.0 - captured);
}

CoeffVector apply_u(DigitWord gamma, const BernoulliParams& params, int max_digits, double tol) {
  require_tol(tol);
  const QuarterInt image = scale_value(gamma, params);
  CoeffVector out;
  if (auto w = word_from_value(image, params)) {
    out.add(*w, 1.0, 0.0);
    out.set_residual_bound(0.0);
    return out;
  }
  for (const DigitWord xi : enumerate_gamma(max_digits, Ordering::value_ascending))
    out.add(xi, mu_hat(image - word_value(xi, params), params, tol));
  out.close_as_unit_vector();
  return out;
}

CoeffVector expand_exponential(QuarterInt t, const BernoulliParams& params, int max_digits, double tol) {
  require_tol(tol);
  CoeffVector out;
  for (const DigitWord g : enumerate_gamma(max_digits, Ordering::value_ascending))
    out.add(g, mu_hat(t - word_value(g, params), params, tol));
  out.close_as_unit_vector();
  return out;
}

namespace {

std::optional<QuarterInt> exact_quarters(double t) {
  const double q = 4.0 * t;
  if (!std::isfinite(q) || q != std::trunc(q) || std::fabs(q) > 9.0e15) return std::nullopt;
  return QuarterInt::from_quarters(static_cast<std::int64_t>(q));
}

MuHatValue coefficient_at(double t, const std::optional<QuarterInt>& exact_t, QuarterInt shift,
                          const BernoulliParams& params, double tol) {
  if (exact_t) return mu_hat(*exact_t - shift, params, tol);
  return mu_hat_numeric(t - shift.to_double(), params, tol);
}

}  // namespace

CoeffVector expand_exponential(double t, const BernoulliParams& params, int max_digits, double tol) {
  if (auto exact = exact_quarters(t)) return expand_exponential(*exact, params, max_digits, tol);
  require_tol(tol);
  CoeffVector out;
  for (const DigitWord g : enumerate_gamma(max_digits, Ordering::value_ascending))
    out.add(g, mu_hat_numeric(t - word_value(g, params).to_double(), params, tol));
  out.close_as_unit_vector();
  return out;
}

std::vector<ParsevalSum> parseval_table(double t, Basis basis, const BernoulliParams& params, int max_digits,
                                        double tol) {
  require_tol(tol);
  const std::int64_t b = basis == Basis::scaled ? params.scale() : 1;
  const auto exact_t = exact_quarters(t);
  // Value-ascending order: the words of length <= d are a prefix of those of
  // length <= d + 1, so every row extends the previous sum.
  const auto words = enumerate_gamma(max_digits, Ordering::value_ascending);
  std::vector<ParsevalSum> table;
  table.reserve(static_cast<std::size_t>(max_digits) + 1);
  ParsevalSum acc;
  std::size_t next = 0;
  for (int d = 0; d <= max_digits; ++d) {
    const std::size_t end = std::size_t{1} << d;
    for (; next < end; ++next) {
      const MuHatValue c = coefficient_at(t, exact_t, b * word_value(words[next], params), params, tol);
      if (c.exact_zero) continue;
      acc.sum += c.magnitude * c.magnitude;
      acc.error_bound += c.error_bound * (2.0 * c.magnitude + c.error_bound);
    }
    table.push_back(acc);
  }
  return table;
}

ParsevalSum parseval_partial(double t, Basis basis, const BernoulliParams& params, int max_digits, double tol) {
  return parseval_table(t, basis, params, max_digits, tol).back();
}

}  // namespace bspec
