#include "bspec/matrix_lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "bspec/operators.hpp"

namespace bspec {

namespace {

std::string show_reduction(const Reduction& r) {
  return "(" + std::to_string(r.sign) + ", " + r.reduced.to_string() + ")";
}

std::string show_pair(DigitWord row, DigitWord col) { return "(" + row.to_string() + ", " + col.to_string() + ")"; }

std::string format_value(const MuHatValue& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g +- %.3g", v.value(), v.error_bound);
  return buf;
}

}  // namespace

EntryValue u_entry(DigitWord xi, DigitWord gamma, const BernoulliParams& params, double tol) {
  return EntryValue{xi, gamma, mu_hat(scale_value(gamma, params) - word_value(xi, params), params, tol)};
}

BlockMatrix::BlockMatrix(std::vector<DigitWord> rows, std::vector<DigitWord> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  const auto r = row_count();
  const auto c = col_count();
  magnitude_ = Eigen::MatrixXd::Zero(r, c);
  error_bound_ = Eigen::MatrixXd::Zero(r, c);
  sign_ = SignGrid::Ones(r, c);
  zero_mask_ = BoolGrid::Constant(r, c, true);
}

EntryValue BlockMatrix::entry(Eigen::Index i, Eigen::Index j) const {
  MuHatValue v;
  v.exact_zero = zero_mask_(i, j);
  v.sign = sign_(i, j);
  v.magnitude = magnitude_(i, j);
  v.error_bound = error_bound_(i, j);
  return EntryValue{rows_[static_cast<std::size_t>(i)], cols_[static_cast<std::size_t>(j)], v};
}

void BlockMatrix::set(Eigen::Index i, Eigen::Index j, const MuHatValue& v) {
  zero_mask_(i, j) = v.exact_zero;
  sign_(i, j) = static_cast<signed char>(v.sign);
  magnitude_(i, j) = v.magnitude;
  error_bound_(i, j) = v.error_bound;
}

BlockMatrix build_u_block(const BernoulliParams& params, std::vector<DigitWord> rows, std::vector<DigitWord> cols,
                          double tol) {
  BlockMatrix m(std::move(rows), std::move(cols));
  std::vector<QuarterInt> row_values, col_images;
  for (DigitWord w : m.rows()) row_values.push_back(word_value(w, params));
  for (DigitWord w : m.cols()) col_images.push_back(scale_value(w, params));

  const Eigen::Index n_rows = m.row_count();
  std::atomic<Eigen::Index> next_row{0};
  auto worker = [&] {
    for (Eigen::Index i = next_row++; i < n_rows; i = next_row++)
      for (Eigen::Index j = 0; j < m.col_count(); ++j)
        m.set(i, j, mu_hat(col_images[static_cast<std::size_t>(j)] - row_values[static_cast<std::size_t>(i)], params, tol));
  };
  const auto entries = static_cast<std::size_t>(n_rows * m.col_count());
  const unsigned threads = entries < 4096 ? 1u : std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return m;
}

BlockMatrix build_u_matrix(const BernoulliParams& params, int max_digits, double tol) {
  auto words = enumerate_gamma(max_digits, Ordering::strata_major);
  return build_u_block(params, words, words, tol);
}

VerificationReport verify_block_diagonal(const BernoulliParams& params, int max_digits) {
  VerificationReport report;
  report.suite = "block-diagonal";
  const std::int64_t p = params.scale();
  const auto words = enumerate_gamma(max_digits, Ordering::strata_major);
  std::size_t cross = 0;
  for (DigitWord xi : words) {
    const QuarterInt row = word_value(xi, params);
    for (DigitWord gamma : words) {
      if (stratum_index(xi) == stratum_index(gamma)) continue;
      ++cross;
      const QuarterInt arg = p * word_value(gamma, params) - row;
      report.record(in_zero_set(arg, params), [&] {
        return "cross-stratum entry " + show_pair(xi, gamma) + " at argument " + arg.to_string() + " is not in Z";
      });
    }
  }
  // U e_0 = e_0: the (0, 0) entry is mu_hat(0) = 1.
  const MuHatValue corner = u_entry(DigitWord{}, DigitWord{}, params, kDefaultTol).value;
  report.record(!corner.exact_zero && corner.sign == 1 && corner.magnitude == 1.0 && corner.error_bound == 0.0,
                [] { return std::string("<e_0, U e_0> != 1"); });
  report.notes.push_back(std::to_string(cross) + " cross-stratum entries over " + std::to_string(words.size()) +
                         " words");
  return report;
}

VerificationReport verify_block_equality(const BernoulliParams& params, int max_digits, int k_max) {
  if (k_max < 1) throw std::invalid_argument("verify_block_equality: k_max must be >= 1");
  VerificationReport report;
  report.suite = "block-equality";
  const std::int64_t p = params.scale();
  const auto words = enumerate_gamma(max_digits, Ordering::strata_major);
  for (int k = 0; k <= k_max; ++k) {
    std::vector<DigitWord> block;
    for (DigitWord w : words)
      if (!w.empty() && stratum_index(w).k() == k) block.push_back(w);
    if (block.empty()) {
      report.notes.push_back("Gamma_" + std::to_string(k) + " empty at this truncation");
      continue;
    }
    for (DigitWord xi_k : block) {
      const DigitWord sigma = DigitWord::from_bits(xi_k.bits() >> k);
      for (DigitWord gamma_k : block) {
        const DigitWord tau = DigitWord::from_bits(gamma_k.bits() >> k);
        const Reduction in_block_k = reduce_argument(p * word_value(gamma_k, params) - word_value(xi_k, params), params);
        const Reduction in_block_0 = reduce_argument(p * word_value(tau, params) - word_value(sigma, params), params);
        report.record(in_block_k == in_block_0, [&] {
          return "W_" + std::to_string(k) + " entry " + show_pair(xi_k, gamma_k) + " reduces to " +
                 show_reduction(in_block_k) + " but W_0 entry " + show_pair(sigma, tau) + " reduces to " +
                 show_reduction(in_block_0);
        });
      }
    }
    report.notes.push_back("Gamma_" + std::to_string(k) + ": " + std::to_string(block.size() * block.size()) +
                           " entry pairs compared");
  }
  return report;
}

VerificationReport verify_commutation_even(const BernoulliParams& params, int max_digits) {
  if (params.n() % 2 != 0) throw std::invalid_argument("verify_commutation_even: n must be even");
  VerificationReport report;
  report.suite = "commute-even";
  const std::int64_t p = params.scale();
  const std::int64_t base = params.base();
  const auto words = enumerate_gamma(max_digits, Ordering::value_ascending);
  std::size_t nonzero_entries = 0;
  for (DigitWord gamma : words) {
    const QuarterInt pg = p * word_value(gamma, params);
    const QuarterInt p2ng = p * word_value(apply_s0(gamma), params);
    for (DigitWord eta : words) {
      // coefficient at e_{2n eta}: S0 U gives mu_hat(p gamma - eta), U S0 gives mu_hat(p 2n gamma - 2n eta)
      const QuarterInt s0u_arg = pg - word_value(eta, params);
      const QuarterInt us0_arg = p2ng - word_value(apply_s0(eta), params);
      report.record(us0_arg == base * s0u_arg, [&] { return "argument mismatch at " + show_pair(eta, gamma); });
      const Reduction lhs = reduce_argument(s0u_arg, params);
      const Reduction rhs = reduce_argument(us0_arg, params);
      report.record(lhs == rhs, [&] {
        return "S0U vs US0 at e_{2n eta}, (eta, gamma) = " + show_pair(eta, gamma) + ": " + show_reduction(lhs) +
               " vs " + show_reduction(rhs);
      });
      if (lhs.sign != 0) ++nonzero_entries;

      // U S0 e_gamma has no component on Gamma_0 (S0 U has none by construction).
      const DigitWord xi0 = apply_s1(eta);
      const QuarterInt off = p2ng - word_value(xi0, params);
      report.record(in_zero_set(off, params), [&] {
        return "U S0 e[" + gamma.to_string() + "] has a Gamma_0 component at e[" + xi0.to_string() + "]";
      });
    }
  }
  report.notes.push_back("commutator U S0 - S0 U vanishes identically; " + std::to_string(nonzero_entries) +
                         " nonzero entries matched");
  return report;
}

VerificationReport verify_odd_relations(const BernoulliParams& params, int max_digits, double tol) {
  if (params.n() % 2 == 0) throw std::invalid_argument("verify_odd_relations: n must be odd");
  VerificationReport report;
  report.suite = "commute-odd";
  const std::int64_t p = params.scale();
  const std::int64_t base = params.base();
  const auto words = enumerate_gamma(max_digits, Ordering::value_ascending);
  std::size_t case1 = 0, case2 = 0, commutator_s = 0, commutator_w = 0;

  for (DigitWord gamma : words) {
    const bool in_2n_gamma = gamma.digit(0) == 0;  // Case 1, includes gamma = 0
    (in_2n_gamma ? case1 : case2) += 1;
    const int eps_s = in_2n_gamma ? 1 : -1;
    const int eps_w = -eps_s;
    const QuarterInt pg = p * word_value(gamma, params);
    const QuarterInt p2ng = p * word_value(apply_s0(gamma), params);

    for (DigitWord eta : words) {
      struct Component {
        const char* name;
        QuarterInt s0u_arg;  // coefficient of S0 U e_gamma
        QuarterInt us0_arg;  // coefficient of U S0 e_gamma, same basis vector
        int expected;
      };
      // s at e_{(2n)^2 eta}, w at e_{2n (n/2 + 2n eta)}
      const Component parts[2] = {
          {"s", pg - word_value(apply_s0(eta), params), p2ng - word_value(apply_s0(apply_s0(eta)), params), eps_s},
          {"w", pg - word_value(apply_s1(eta), params), p2ng - word_value(apply_s0(apply_s1(eta)), params), eps_w},
      };
      for (const Component& c : parts) {
        report.record(c.us0_arg == base * c.s0u_arg, [&] { return "argument mismatch at " + show_pair(eta, gamma); });
        const Reduction plain = reduce_argument(c.s0u_arg, params);
        const Reduction tilde = reduce_argument(c.us0_arg, params);
        const Reduction expected{c.expected * plain.sign, plain.reduced};
        report.record(tilde == expected, [&] {
          return std::string(c.name) + "~ vs " + (c.expected > 0 ? "+" : "-") + c.name + " at (eta, gamma) = " +
                 show_pair(eta, gamma) + ": " + show_reduction(tilde) + " vs " + show_reduction(expected);
        });

        const MuHatValue a = mu_hat(c.s0u_arg, params, tol);
        const MuHatValue b = mu_hat(c.us0_arg, params, tol);
        const double slack = a.error_bound + b.error_bound + 4 * std::numeric_limits<double>::epsilon();
        report.record(std::fabs(b.value() - c.expected * a.value()) <= slack, [&] {
          return std::string("numeric ") + c.name + " relation off at " + show_pair(eta, gamma);
        });
        // Commutator component: (expected - 1) * coefficient, i.e. 0 or -2x.
        if (c.expected < 0 && plain.sign != 0) (c.name[0] == 's' ? commutator_s : commutator_w) += 1;
      }
    }
  }
  report.notes.push_back(std::to_string(case1) + " columns in 2n Gamma (U S0 = s - w), " + std::to_string(case2) +
                         " in Gamma_0 (U S0 = -s + w)");
  report.notes.push_back("commutator nonzero entries: -2s on " + std::to_string(commutator_s) + ", -2w on " +
                         std::to_string(commutator_w));
  return report;
}

VerificationReport verify_multiplication_identity(int max_digits, double tol) {
  const BernoulliParams params(2, 5);
  VerificationReport report;
  report.suite = "multiplication";
  std::vector<DigitWord> w0;
  for (DigitWord w : enumerate_gamma(max_digits, Ordering::value_ascending))
    if (w.digit(0) == 1) w0.push_back(w);

  const QuarterInt one = QuarterInt::from_integer(1);
  for (DigitWord xi_p : w0) {
    const DigitWord xi = *apply_s1_adj(xi_p);
    for (DigitWord gamma_p : w0) {
      const DigitWord gamma = *apply_s1_adj(gamma_p);
      const QuarterInt block_arg = scale_value(gamma_p, params) - word_value(xi_p, params);  // 5 gamma' - xi'
      const QuarterInt mult_arg = one + scale_value(gamma, params) - word_value(xi, params);  // 1 + 5 gamma - xi
      report.record(in_zero_set(block_arg, params) == in_zero_set(mult_arg, params), [&] {
        return "zero classification differs at " + show_pair(xi_p, gamma_p);
      });
      const Reduction lhs = reduce_argument(block_arg, params);
      const Reduction rhs = reduce_argument(mult_arg, params);
      report.record(lhs == rhs, [&] {
        return "U|W0 " + show_pair(xi_p, gamma_p) + " reduces to " + show_reduction(lhs) + ", mu_hat(1+5g-x) to " +
               show_reduction(rhs);
      });
      const MuHatValue a = mu_hat(block_arg, params, tol);
      const MuHatValue b = mu_hat(mult_arg, params, tol);
      report.record(std::fabs(a.value() - b.value()) <= a.error_bound + b.error_bound, [&] {
        return "numeric mismatch at " + show_pair(xi_p, gamma_p);
      });
    }
  }
  report.notes.push_back(std::to_string(w0.size() * w0.size()) + " W_0 entries compared");
  return report;
}

namespace {

// {1} -> 0, Gamma~_k -> k + 1
Eigen::Index tilde_block(TildeStratum s) { return s.kind() == TildeStratum::Kind::one_point ? 0 : s.k() + 1; }

bool expected_nonzero_block(Eigen::Index r, Eigen::Index c) {
  // r, c: 0 = {1}, 1 = Gamma~_0, >= 2 = Gamma~_{k >= 1}
  if (r == 0) return c == 1;
  if (r == 1) return c != 1;
  return c == 1;
}

}  // namespace

SparsityAnalysis analyze_w0_sparsity(int max_digits, int witness_digits) {
  if (max_digits < 1) throw std::invalid_argument("analyze_w0_sparsity: max_digits must be >= 1");
  if (witness_digits < max_digits || witness_digits > 30)
    throw std::invalid_argument("analyze_w0_sparsity: witness_digits must be in [max_digits, 30]");
  const BernoulliParams params(2, 5);
  SparsityAnalysis out;
  out.report.suite = "w0-sparsity";

  const Eigen::Index blocks = max_digits;  // {1}, Gamma~_0 .. Gamma~_{max_digits-2}
  out.strata.push_back(TildeStratum::one_point());
  for (int k = 0; k + 2 <= max_digits; ++k) out.strata.push_back(TildeStratum::tilde(k));
  out.members.assign(static_cast<std::size_t>(blocks), {});
  for (DigitWord w : enumerate_gamma(max_digits, Ordering::value_ascending))
    if (w.digit(0) == 1) out.members[static_cast<std::size_t>(tilde_block(tilde_stratum_index(w, params)))].push_back(w);

  // Rows beyond the truncation, consulted only for witnesses.
  std::vector<std::vector<DigitWord>> extended;
  auto extended_rows = [&](Eigen::Index r) -> const std::vector<DigitWord>& {
    if (extended.empty()) {
      extended.assign(static_cast<std::size_t>(blocks), {});
      for (DigitWord w : enumerate_gamma(witness_digits, Ordering::value_ascending)) {
        if (w.digit(0) != 1 || w.length() <= max_digits) continue;
        const auto b = tilde_block(tilde_stratum_index(w, params));
        if (b < blocks) extended[static_cast<std::size_t>(b)].push_back(w);
      }
    }
    return extended[static_cast<std::size_t>(r)];
  };

  out.nonzero_counts = Eigen::Array<int, Eigen::Dynamic, Eigen::Dynamic>::Zero(blocks, blocks);
  out.expected_nonzero = BoolGrid::Constant(blocks, blocks, false);
  auto& report = out.report;

  for (Eigen::Index r = 0; r < blocks; ++r) {
    for (Eigen::Index c = 0; c < blocks; ++c) {
      const bool star = expected_nonzero_block(r, c);
      out.expected_nonzero(r, c) = star;
      const auto label = "(" + out.strata[static_cast<std::size_t>(r)].to_string() + ", " +
                         out.strata[static_cast<std::size_t>(c)].to_string() + ")";
      const auto& cols = out.members[static_cast<std::size_t>(c)];
      std::optional<std::pair<DigitWord, DigitWord>> witness;
      for (DigitWord xi : out.members[static_cast<std::size_t>(r)]) {
        for (DigitWord gamma : cols) {
          const QuarterInt arg = scale_value(gamma, params) - word_value(xi, params);
          const bool zero = in_zero_set(arg, params);
          if (!zero) {
            ++out.nonzero_counts(r, c);
            if (!witness) witness.emplace(xi, gamma);
          }
          if (!star) {
            report.record(zero, [&] { return "block " + label + " entry " + show_pair(xi, gamma) + " is nonzero"; });
          } else if ((r == 0 && c == 1) || (r >= 2 && c == 1)) {
            report.record(!zero, [&] { return "block " + label + " entry " + show_pair(xi, gamma) + " is zero"; });
          }
        }
      }
      if (!star) continue;
      if (cols.empty()) {
        report.notes.push_back("block " + label + " empty at this truncation");
        continue;
      }
      bool beyond = false;
      if (!witness) {
        for (DigitWord xi : extended_rows(r)) {
          for (DigitWord gamma : cols) {
            if (!in_zero_set(scale_value(gamma, params) - word_value(xi, params), params)) {
              witness.emplace(xi, gamma);
              break;
            }
          }
          if (witness) break;
        }
        beyond = witness.has_value();
      }
      report.record(witness.has_value(), [&] {
        return "block " + label + " has no nonzero entry with rows up to " + std::to_string(witness_digits) + " digits";
      });
      if (witness) {
        const MuHatValue v = u_entry(witness->first, witness->second, params, kDefaultTol).value;
        report.notes.push_back("witness " + label + " at " + show_pair(witness->first, witness->second) +
                               (beyond ? " (row beyond truncation)" : "") + ": mu_hat = " + format_value(v));
      }
    }
  }

  // Entry exactly 1 in (Gamma~_0, Gamma~_k): the row xi' = 5 gamma' whenever that lies in Gamma.
  // For gamma' = 1 + 4^{k+1} this is xi' = 5 + 5 * 4^{k+1}, which has k + 4 digits.
  for (std::size_t b = 2; b < out.members.size(); ++b) {
    const int k = out.strata[b].k();
    bool found = false;
    for (DigitWord gamma_p : out.members[b]) {
      const auto xi_p = word_from_value(scale_value(gamma_p, params), params);
      if (!xi_p || xi_p->length() > witness_digits) continue;
      const TildeStratum row_class = tilde_stratum_index(*xi_p, params);
      if (xi_p->digit(0) != 1 || row_class != TildeStratum::tilde(0)) {
        report.record(false, [&] { return "5 * " + gamma_p.to_string() + " = " + xi_p->to_string() + " is not in Gamma~_0"; });
        continue;
      }
      const MuHatValue v = u_entry(*xi_p, gamma_p, params, kDefaultTol).value;
      const bool exact_one = !v.exact_zero && v.sign == 1 && v.magnitude == 1.0 && v.error_bound == 0.0;
      report.record(exact_one, [&] { return "entry " + show_pair(*xi_p, gamma_p) + " is not exactly 1"; });
      if (exact_one && !found) {
        report.notes.push_back("exact 1 in (Gamma~_0, Gamma~_" + std::to_string(k) + ") at " + show_pair(*xi_p, gamma_p));
        found = true;
      }
    }
    report.record(found, [&] { return "no exact-1 entry found in (Gamma~_0, Gamma~_" + std::to_string(k) + ")"; });
  }
  return out;
}

SparsityAnalysis analyze_w0_sparsity(int max_digits) {
  return analyze_w0_sparsity(max_digits, std::clamp(max_digits + 4, max_digits, 30));
}

VerificationReport verify_all(const BernoulliParams& params, int max_digits, double tol) {
  VerificationReport all;
  all.suite = "all";
  all.merge(verify_cuntz(params, std::max(1, max_digits)));
  if (params.has_scale()) {
    all.merge(verify_block_diagonal(params, max_digits));
    all.merge(verify_block_equality(params, max_digits, std::clamp(max_digits - 1, 1, 3)));
    if (params.n() % 2 == 0)
      all.merge(verify_commutation_even(params, max_digits));
    else
      all.merge(verify_odd_relations(params, max_digits, tol));
    if (params.n() == 2 && params.scale() == 5) {
      all.merge(verify_multiplication_identity(max_digits, tol));
      if (max_digits >= 1) all.merge(analyze_w0_sparsity(max_digits).report);
    }
  }
  return all;
}

}  // namespace bspec
