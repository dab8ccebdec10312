#include "bspec/quarter_int.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace bspec {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("QuarterInt: addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("QuarterInt: subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("QuarterInt: multiplication overflow");
  return r;
}

}  // namespace detail

std::string QuarterInt::to_string() const {
  const std::int64_t g = std::gcd(quarters_, std::int64_t{4});
  const std::int64_t num = quarters_ / g;
  const std::int64_t den = 4 / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string QuarterInt::to_quarter_string() const { return std::to_string(quarters_) + "/4"; }

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<QuarterInt> parse_quarter_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    try {
      return QuarterInt::from_integer(*v);
    } catch (const std::overflow_error&) {
      return std::nullopt;
    }
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  std::int64_t a = *num;
  std::int64_t b = *den;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  const std::int64_t g = std::gcd(a, b);
  if (g != 0) {
    a /= g;
    b /= g;
  }
  if (4 % b != 0) return std::nullopt;
  std::int64_t quarters;
  if (__builtin_mul_overflow(a, 4 / b, &quarters)) return std::nullopt;
  return QuarterInt::from_quarters(quarters);
}

}  // namespace bspec
