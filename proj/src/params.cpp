#include "bspec/params.hpp"

#include <stdexcept>
#include <string>

namespace bspec {

BernoulliParams::BernoulliParams(int n, std::optional<int> p) : n_(n), p_(p) {
  if (n < 1) throw std::invalid_argument("BernoulliParams: n must be >= 1, got " + std::to_string(n));
  // 2n^k growth is tracked in 64-bit numerators; keep the base sane.
  if (n > (1 << 20)) throw std::invalid_argument("BernoulliParams: n too large");
  if (p) {
    if (*p < 3 || *p % 2 == 0)
      throw std::invalid_argument("BernoulliParams: p must be odd and >= 3, got " + std::to_string(*p));
  }
}

int BernoulliParams::scale() const {
  if (!p_) throw std::invalid_argument("BernoulliParams: operation requires the spectral scale p");
  return *p_;
}

}  // namespace bspec
