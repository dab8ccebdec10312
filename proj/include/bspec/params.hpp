#pragma once

#include <cstdint>
#include <optional>

namespace bspec {

/// Fixes the Bernoulli convolution mu with contraction 1/(2n) and, optionally,
/// the odd spectral scaling p used to build the operator U.
///
/// n = 1 is accepted by the arithmetic layer (contraction 1/2) but is not a
/// case with an exponential orthonormal basis worth verifying.
class BernoulliParams {
 public:
  /// Throws std::invalid_argument unless n >= 1 and, when given, p is odd and >= 3.
  explicit BernoulliParams(int n, std::optional<int> p = std::nullopt);

  int n() const { return n_; }
  std::optional<int> p() const { return p_; }
  bool has_scale() const { return p_.has_value(); }

  /// The scale p; throws std::invalid_argument if absent.
  int scale() const;
  /// Reciprocal of the contraction ratio, 2n.
  std::int64_t base() const { return 2 * static_cast<std::int64_t>(n_); }
  double lambda() const { return 1.0 / static_cast<double>(base()); }

  friend bool operator==(const BernoulliParams&, const BernoulliParams&) = default;

 private:
  int n_;
  std::optional<int> p_;
};

}  // namespace bspec
