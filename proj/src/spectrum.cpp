#include "bspec/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bspec {

DigitWord DigitWord::from_bits(std::uint64_t bits) {
  if (std::bit_width(bits) > kMaxDigits) throw std::length_error("DigitWord: more than 62 digits");
  DigitWord w;
  w.bits_ = bits;
  return w;
}

std::optional<DigitWord> DigitWord::parse(std::string_view bit_string) {
  if (bit_string.size() > static_cast<std::size_t>(kMaxDigits)) return std::nullopt;
  if (!bit_string.empty() && bit_string.back() != '1') return std::nullopt;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < bit_string.size(); ++i) {
    const char c = bit_string[i];
    if (c == '1')
      bits |= std::uint64_t{1} << i;
    else if (c != '0')
      return std::nullopt;
  }
  return from_bits(bits);
}

int DigitWord::length() const { return std::bit_width(bits_); }

std::string DigitWord::to_string() const {
  std::string s;
  for (int i = 0; i < length(); ++i) s.push_back(digit(i) ? '1' : '0');
  return s;
}

QuarterInt word_value(DigitWord w, const BernoulliParams& params) {
  // 4 * (n/2) * sum b_i (2n)^i = 2n * sum b_i (2n)^i
  const std::int64_t base = params.base();
  std::int64_t acc = 0;
  for (int i = w.length() - 1; i >= 0; --i) acc = detail::checked_add(detail::checked_mul(acc, base), w.digit(i));
  return QuarterInt::from_quarters(detail::checked_mul(acc, base));
}

std::optional<DigitWord> word_from_value(QuarterInt t, const BernoulliParams& params) {
  const std::int64_t base = params.base();
  const std::int64_t q = t.quarters();
  if (q < 0 || q % base != 0) return std::nullopt;
  std::int64_t rest = q / base;  // 2t/n
  std::uint64_t bits = 0;
  for (int i = 0; rest != 0; ++i) {
    const std::int64_t d = rest % base;
    if (d > 1 || i >= DigitWord::kMaxDigits) return std::nullopt;
    if (d == 1) bits |= std::uint64_t{1} << i;
    rest /= base;
  }
  return DigitWord::from_bits(bits);
}

std::vector<DigitWord> enumerate_gamma(int max_digits, Ordering ordering) {
  if (max_digits < 0 || max_digits > 30) throw std::invalid_argument("enumerate_gamma: max_digits must be in [0, 30]");
  const std::uint64_t count = std::uint64_t{1} << max_digits;
  std::vector<DigitWord> out;
  out.reserve(count);
  for (std::uint64_t b = 0; b < count; ++b) out.push_back(DigitWord::from_bits(b));
  if (ordering == Ordering::strata_major) {
    std::stable_sort(out.begin(), out.end(), [](DigitWord a, DigitWord b) {
      return stratum_index(a) < stratum_index(b);
    });
  }
  return out;
}

std::string StratumIndex::to_string() const {
  return is_zero_point() ? std::string("0") : "Gamma_" + std::to_string(level_);
}

StratumIndex stratum_index(DigitWord w) {
  if (w.empty()) return StratumIndex::zero_point();
  return StratumIndex::gamma(std::countr_zero(w.bits()));
}

std::string TildeStratum::to_string() const {
  switch (kind_) {
    case Kind::one_point: return "1";
    case Kind::tilde: return "Gamma~_" + std::to_string(k_);
    case Kind::other: break;
  }
  return "other";
}

TildeStratum tilde_stratum_index(DigitWord w, const BernoulliParams& params) {
  if (w.empty() || w.digit(0) != 1) throw std::invalid_argument("tilde_stratum_index: word " + w.to_string() + " is not in Gamma_0");
  if (params.n() != 2) return TildeStratum::other();
  const std::uint64_t rest = w.bits() >> 1;
  if (rest == 0) return TildeStratum::one_point();
  return TildeStratum::tilde(std::countr_zero(rest));
}

QuarterInt scale_value(DigitWord w, const BernoulliParams& params) {
  return static_cast<std::int64_t>(params.scale()) * word_value(w, params);
}

}  // namespace bspec
