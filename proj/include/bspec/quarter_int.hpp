#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bspec {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace detail

/// An exact element of (1/4)Z, stored as its numerator over 4.
///
/// Every argument handed to the Fourier transform by the exact layer
/// (differences of spectrum points, p-scaled points, shifted points) lives
/// here. Arithmetic is exact; overflow of the 64-bit numerator throws
/// std::overflow_error instead of wrapping.
class QuarterInt {
 public:
  constexpr QuarterInt() = default;

  static constexpr QuarterInt from_quarters(std::int64_t quarters) {
    QuarterInt q;
    q.quarters_ = quarters;
    return q;
  }
  static QuarterInt from_integer(std::int64_t value) {
    return from_quarters(detail::checked_mul(value, 4));
  }

  /// Numerator over 4, i.e. 4t.
  constexpr std::int64_t quarters() const { return quarters_; }

  constexpr bool is_zero() const { return quarters_ == 0; }
  constexpr bool is_integer() const { return quarters_ % 4 == 0; }
  double to_double() const { return static_cast<double>(quarters_) / 4.0; }

  /// Reduced fraction: "5", "-3/2", "1/4".
  std::string to_string() const;
  /// Literal numerator over 4: "20/4".
  std::string to_quarter_string() const;

  QuarterInt operator-() const { return from_quarters(detail::checked_sub(0, quarters_)); }
  friend QuarterInt operator+(QuarterInt a, QuarterInt b) {
    return from_quarters(detail::checked_add(a.quarters_, b.quarters_));
  }
  friend QuarterInt operator-(QuarterInt a, QuarterInt b) {
    return from_quarters(detail::checked_sub(a.quarters_, b.quarters_));
  }
  friend QuarterInt operator*(std::int64_t k, QuarterInt a) {
    return from_quarters(detail::checked_mul(k, a.quarters_));
  }
  friend QuarterInt operator*(QuarterInt a, std::int64_t k) { return k * a; }

  friend constexpr auto operator<=>(QuarterInt, QuarterInt) = default;

 private:
  std::int64_t quarters_ = 0;
};

/// Parses "7", "-3", "3/2", "13/4", "a/b" with b dividing 4 after reduction.
/// Returns nullopt for anything not exactly a quarter-integer (including
/// decimals such as "0.3").
std::optional<QuarterInt> parse_quarter_int(std::string_view text);

}  // namespace bspec
