#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bspec/params.hpp"
#include "bspec/quarter_int.hpp"

namespace bspec {

/// A point of the canonical spectrum, as its finite {0,1} digit sequence
/// b_0 b_1 ... b_m. The point is (n/2) * sum b_i (2n)^i.
///
/// Bit i of the packed word is b_i, so the word is canonical by construction
/// (no trailing zero digits) and ordering by packed bits is ordering by
/// value for every n.
class DigitWord {
 public:
  static constexpr int kMaxDigits = 62;

  constexpr DigitWord() = default;
  /// Throws std::length_error above kMaxDigits digits.
  static DigitWord from_bits(std::uint64_t bits);
  /// Parses a bit string b_0 b_1 ... ("101"). Rejects non-canonical input
  /// (trailing '0'), characters other than 0/1, and overlong strings.
  static std::optional<DigitWord> parse(std::string_view bit_string);

  constexpr std::uint64_t bits() const { return bits_; }
  int length() const;
  bool empty() const { return bits_ == 0; }
  int digit(int i) const { return static_cast<int>((bits_ >> i) & 1u); }

  /// b_0 first; the empty word is "".
  std::string to_string() const;

  friend constexpr auto operator<=>(DigitWord, DigitWord) = default;

 private:
  std::uint64_t bits_ = 0;
};

QuarterInt word_value(DigitWord w, const BernoulliParams& params);

/// Inverse of word_value: greedy base-2n digits of 2t/n; nullopt iff t is not
/// in the spectrum.
std::optional<DigitWord> word_from_value(QuarterInt t, const BernoulliParams& params);

enum class Ordering { value_ascending, strata_major };

/// All 2^max_digits words of length <= max_digits. Strata-major lists the
/// empty word, then Gamma_0, Gamma_1, ..., each value-ascending.
std::vector<DigitWord> enumerate_gamma(int max_digits, Ordering ordering);

/// Either the point 0 or the stratum Gamma_k (exactly k leading zero digits).
class StratumIndex {
 public:
  static constexpr StratumIndex zero_point() { return StratumIndex(-1); }
  static constexpr StratumIndex gamma(int k) { return StratumIndex(k); }

  constexpr bool is_zero_point() const { return level_ < 0; }
  constexpr int k() const { return level_; }
  std::string to_string() const;

  friend constexpr auto operator<=>(StratumIndex, StratumIndex) = default;

 private:
  constexpr explicit StratumIndex(int level) : level_(level) {}
  int level_;
};

StratumIndex stratum_index(DigitWord w);

/// Refinement of Gamma_0 = {1} u Gamma~_0 u Gamma~_1 u ... for n = 2,
/// Gamma~_k = 1 + 4^{k+1}(1 + 4 Gamma).
class TildeStratum {
 public:
  enum class Kind { one_point, tilde, other };

  static constexpr TildeStratum one_point() { return TildeStratum(Kind::one_point, 0); }
  static constexpr TildeStratum tilde(int k) { return TildeStratum(Kind::tilde, k); }
  static constexpr TildeStratum other() { return TildeStratum(Kind::other, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr int k() const { return k_; }
  std::string to_string() const;

  friend constexpr bool operator==(TildeStratum, TildeStratum) = default;

 private:
  constexpr TildeStratum(Kind kind, int k) : kind_(kind), k_(k) {}
  Kind kind_;
  int k_;
};

/// Throws std::invalid_argument when w is not in Gamma_0. Reports `other`
/// for n != 2, where no refinement is defined.
TildeStratum tilde_stratum_index(DigitWord w, const BernoulliParams& params);

/// p * word_value(w). Throws std::invalid_argument without p.
QuarterInt scale_value(DigitWord w, const BernoulliParams& params);

}  // namespace bspec
