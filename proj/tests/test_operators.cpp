#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "bspec/operators.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

DigitWord word(const char* s) { return *DigitWord::parse(s); }

}  // namespace

TEST_CASE("isometries on words and values") {
  CHECK(apply_s0(word("1")) == word("01"));
  CHECK(apply_s1(word("1")) == word("11"));
  CHECK(apply_s0(DigitWord{}) == DigitWord{});
  CHECK(apply_s1(DigitWord{}) == word("1"));
  CHECK(apply_s0_adj(word("01")) == word("1"));
  CHECK_FALSE(apply_s0_adj(word("1")));
  CHECK(apply_s1_adj(word("1")) == DigitWord{});
  CHECK_FALSE(apply_s1_adj(word("01")));
  CHECK(apply_s0_adj(DigitWord{}) == DigitWord{});
  CHECK_THROWS_AS(apply_s0(DigitWord::from_bits((std::uint64_t{1} << 61) | 1)), std::length_error);

  // S0 e_g = e_{2n g}, S1 e_g = e_{n/2 + 2n g}.
  for (int n : {1, 2, 3, 4}) {
    const BernoulliParams params(n);
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
      const DigitWord w = DigitWord::from_bits(bits);
      const QuarterInt v = word_value(w, params);
      CHECK(word_value(apply_s0(w), params) == params.base() * v);
      CHECK(word_value(apply_s1(w), params) == QuarterInt::from_quarters(2 * n) + params.base() * v);
    }
  }
}

TEST_CASE("Cuntz relations hold on truncations") {
  for (int n : {1, 2, 3, 4, 5}) {
    const VerificationReport r = verify_cuntz(BernoulliParams(n), 8);
    INFO("n = " << n);
    CHECK(r.passed());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("U on a basis vector") {
  const BernoulliParams params(2, 5);
  // 5 * 1 = 5 lies in Gamma: U e_1 is a basis vector.
  const CoeffVector e = apply_u(word("1"), params, 6, 1e-12);
  CHECK(e.size() == 1);
  CHECK(e.coefficient(word("11")) == 1.0);
  CHECK(e.residual_bound() == 0.0);

  const CoeffVector u = apply_u(word("11"), params, 6, 1e-12);
  CHECK(u.coefficient(word("1")) == doctest::Approx(0.5811539214293868).epsilon(1e-12));
  for (const CoeffTerm& t : u.terms()) {
    CHECK(stratum_index(t.word) == StratumIndex::gamma(0));
    CHECK(t.error_bound <= 1e-12);
  }
  CHECK(u.norm_squared() <= 1.0 + u.norm_squared_error());
  CHECK(u.residual_bound() >= 0.0);
  CHECK(u.residual_bound() <= 1.0);
  CHECK(u.contains(word("1")));
  CHECK_FALSE(u.contains(word("01")));
  CHECK(u.coefficient(word("01")) == 0.0);
}

TEST_CASE("exponential expansion") {
  const BernoulliParams params(2);
  // e_t for t in Gamma is a single basis vector.
  const CoeffVector a = expand_exponential(QuarterInt::from_integer(5), params, 6, 1e-12);
  CHECK(a.size() == 1);
  CHECK(a.coefficient(word("11")) == 1.0);

  // <e_t, e_g> = mu_hat(t - g).
  const double t = 0.3;
  const CoeffVector b = expand_exponential(t, params, 5, 1e-12);
  for (const CoeffTerm& term : b.terms()) {
    const long double ref = oracle::mu_hat(t - word_value(term.word, params).to_double(), 2);
    CHECK(std::fabs(static_cast<double>(term.coefficient - ref)) <= term.error_bound + 1e-15);
  }
  CHECK(b.residual_bound() == doctest::Approx(1.0 - b.norm_squared()).epsilon(1e-9));

  const CoeffVector c = expand_exponential(1.25, params, 4, 1e-12);
  const CoeffVector d = expand_exponential(QuarterInt::from_quarters(5), params, 4, 1e-12);
  CHECK(c.size() == d.size());
}

TEST_CASE("Parseval partial sums are monotone and Bessel-bounded") {
  for (int n : {2, 3}) {
    const BernoulliParams params(n, n == 2 ? 5 : 3);
    for (double t : {0.1, 0.3, std::numbers::sqrt2 / 2, 2.7}) {
      for (Basis basis : {Basis::canonical, Basis::scaled}) {
        const auto table = parseval_table(t, basis, params, 10, 1e-12);
        REQUIRE(table.size() == 11);
        for (std::size_t i = 0; i < table.size(); ++i) {
          CHECK(table[i].sum <= 1.0 + table[i].error_bound);
          if (i > 0) CHECK(table[i].sum >= table[i - 1].sum);
        }
        CHECK(parseval_partial(t, basis, params, 10, 1e-12).sum == table.back().sum);
      }
    }
  }
  // For t in Gamma the canonical sum is exactly 1 at once.
  const auto exact = parseval_table(5.0, Basis::canonical, BernoulliParams(2), 3, 1e-12);
  CHECK(exact.back().sum == 1.0);
}

TEST_CASE("Parseval convergence fixtures, n = 2, p = 5") {
  // Smallest digit length at which the partial sum reaches 0.99, from an oracle run.
  struct Fixture {
    double t;
    int canonical_depth;
    int scaled_depth;
  };
  const BernoulliParams params(2, 5);
  for (const Fixture& f : {Fixture{0.1, 1, 4}, Fixture{0.3, 2, 11}, Fixture{std::numbers::sqrt2 / 2, 2, 15}}) {
    for (auto [basis, depth] : {std::pair{Basis::canonical, f.canonical_depth}, std::pair{Basis::scaled, f.scaled_depth}}) {
      const auto table = parseval_table(f.t, basis, params, depth, 1e-12);
      INFO("t = " << f.t);
      CHECK(table[static_cast<std::size_t>(depth)].sum >= 0.99);
      CHECK(table[static_cast<std::size_t>(depth - 1)].sum < 0.99);
    }
  }
}
