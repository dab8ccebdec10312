#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "bspec/exact_arith.hpp"
#include "bspec/params.hpp"
#include "bspec/report.hpp"
#include "bspec/spectrum.hpp"

namespace bspec {

constexpr double kDefaultTol = 1e-12;

/// Entry U(row, col) = <e_row, U e_col> = mu_hat(p * col - row).
struct EntryValue {
  DigitWord row;
  DigitWord col;
  MuHatValue value;
};

EntryValue u_entry(DigitWord xi, DigitWord gamma, const BernoulliParams& params, double tol);

using BoolGrid = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;
using SignGrid = Eigen::Array<signed char, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense truncation of U over the given row and column index sets.
/// zero_mask(i, j) holds exactly when p*col_j - row_i is in the zero set.
class BlockMatrix {
 public:
  BlockMatrix(std::vector<DigitWord> rows, std::vector<DigitWord> cols);

  const std::vector<DigitWord>& rows() const { return rows_; }
  const std::vector<DigitWord>& cols() const { return cols_; }
  Eigen::Index row_count() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index col_count() const { return static_cast<Eigen::Index>(cols_.size()); }

  EntryValue entry(Eigen::Index i, Eigen::Index j) const;
  void set(Eigen::Index i, Eigen::Index j, const MuHatValue& v);

  const BoolGrid& zero_mask() const { return zero_mask_; }
  const Eigen::MatrixXd& magnitudes() const { return magnitude_; }
  const Eigen::MatrixXd& error_bounds() const { return error_bound_; }
  const SignGrid& signs() const { return sign_; }
  /// sign * magnitude, the numeric matrix.
  Eigen::MatrixXd values() const { return sign_.cast<double>().matrix().cwiseProduct(magnitude_); }

 private:
  std::vector<DigitWord> rows_;
  std::vector<DigitWord> cols_;
  Eigen::MatrixXd magnitude_;
  Eigen::MatrixXd error_bound_;
  SignGrid sign_;
  BoolGrid zero_mask_;
};

/// Entries of U over arbitrary index sets; rows are filled in parallel.
BlockMatrix build_u_block(const BernoulliParams& params, std::vector<DigitWord> rows, std::vector<DigitWord> cols,
                          double tol);

/// U over all words of length <= max_digits in strata-major order.
BlockMatrix build_u_matrix(const BernoulliParams& params, int max_digits, double tol);

/// Cross-stratum entries vanish exactly, and U e_0 = e_0.
VerificationReport verify_block_diagonal(const BernoulliParams& params, int max_digits);

/// U restricted to W_k has the same entries as U restricted to W_0, for
/// k = 1..k_max, compared as exact (sign, reduced argument) pairs.
VerificationReport verify_block_equality(const BernoulliParams& params, int max_digits, int k_max);

/// S0 U = U S0 entrywise for even n. Throws std::invalid_argument for odd n.
VerificationReport verify_commutation_even(const BernoulliParams& params, int max_digits);

/// For odd n: with S0 U e = s + w (s in S0^2 L2, w in W_1), U S0 e is s - w
/// on 2n Gamma and -s + w on Gamma_0, so the commutator is -2w or -2s.
/// Checked exactly through reduction, then cross-checked numerically at tol.
/// Throws std::invalid_argument for even n.
VerificationReport verify_odd_relations(const BernoulliParams& params, int max_digits, double tol = kDefaultTol);

/// n = 2, p = 5: the (1+4 xi, 1+4 gamma) entry of U on W_0 equals
/// mu_hat(1 + 5 gamma - xi) for all W_0 words of length <= max_digits.
VerificationReport verify_multiplication_identity(int max_digits, double tol = kDefaultTol);

struct SparsityAnalysis {
  std::vector<TildeStratum> strata;  // {1}, Gamma~_0, Gamma~_1, ...
  std::vector<std::vector<DigitWord>> members;
  Eigen::Array<int, Eigen::Dynamic, Eigen::Dynamic> nonzero_counts;  // per (row block, col block)
  BoolGrid expected_nonzero;                                         // the predicted pattern
  VerificationReport report;
};

/// n = 2, p = 5: partitions the Gamma_0 truncation by tilde stratum and checks
/// the zero / nonzero block pattern of U on W_0, exhibiting a witness in every
/// nonzero block (including an entry exactly 1 where 5 gamma' = xi').
/// Witness rows may be longer than max_digits, up to witness_digits.
SparsityAnalysis analyze_w0_sparsity(int max_digits, int witness_digits);
/// witness_digits = max_digits + 4 (at most 30).
SparsityAnalysis analyze_w0_sparsity(int max_digits);

/// Every suite that applies to params, merged.
VerificationReport verify_all(const BernoulliParams& params, int max_digits, double tol = kDefaultTol);

}  // namespace bspec
