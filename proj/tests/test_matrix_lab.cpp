#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bspec/matrix_lab.hpp"
#include "bspec/operators.hpp"
#include "oracles.hpp"

using namespace bspec;

namespace {

DigitWord word(const char* s) { return *DigitWord::parse(s); }

}  // namespace

TEST_CASE("single entries") {
  const BernoulliParams params(2, 5);
  // p * 0 - 0 = 0.
  const EntryValue origin = u_entry(DigitWord{}, DigitWord{}, params, kDefaultTol);
  CHECK(origin.value.value() == 1.0);
  CHECK(origin.value.error_bound == 0.0);
  // 5 * 5 - 1 = 24.
  const EntryValue a = u_entry(word("1"), word("11"), params, kDefaultTol);
  CHECK(a.value.value() == doctest::Approx(0.5811539214293868).epsilon(1e-12));
  // 5 * 1 - 4 = 1 is in Z.
  CHECK(u_entry(word("01"), word("1"), params, kDefaultTol).value.exact_zero);
  // 5 * 1 - 5 = 0.
  CHECK(u_entry(word("11"), word("1"), params, kDefaultTol).value.value() == 1.0);
}

TEST_CASE("matrix mask and values agree with the oracles") {
  for (auto [n, p] : {std::pair{2, 5}, std::pair{3, 5}, std::pair{4, 3}}) {
    const BernoulliParams params(n, p);
    const BlockMatrix m = build_u_matrix(params, 5, kDefaultTol);
    REQUIRE(m.row_count() == 32);
    for (Eigen::Index i = 0; i < m.row_count(); ++i) {
      for (Eigen::Index j = 0; j < m.col_count(); ++j) {
        const DigitWord xi = m.rows()[static_cast<std::size_t>(i)];
        const DigitWord g = m.cols()[static_cast<std::size_t>(j)];
        const QuarterInt arg = scale_value(g, params) - word_value(xi, params);
        INFO("n = " << n << " entry " << xi.to_string() << ", " << g.to_string());
        CHECK(m.zero_mask()(i, j) == oracle::in_zero_set(arg.quarters(), n));
        if (m.zero_mask()(i, j)) {
          CHECK(m.values()(i, j) == 0.0);
          continue;
        }
        const long double ref = oracle::mu_hat(arg.to_double(), n);
        CHECK(std::fabs(static_cast<double>(m.values()(i, j) - ref)) <= m.error_bounds()(i, j) + 1e-15);
        CHECK(m.magnitudes()(i, j) > m.error_bounds()(i, j));
      }
    }
  }
}

TEST_CASE("parallel and serial builds agree") {
  const BernoulliParams params(2, 5);
  const auto words = enumerate_gamma(7, Ordering::strata_major);
  const BlockMatrix big = build_u_block(params, words, words, kDefaultTol);
  const std::vector<DigitWord> head(words.begin(), words.begin() + 8);
  const BlockMatrix small = build_u_block(params, head, words, kDefaultTol);
  CHECK((big.zero_mask().topRows(8) == small.zero_mask()).all());
  CHECK((big.values().topRows(8) - small.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("verification suites pass") {
  CHECK(verify_block_diagonal(BernoulliParams(2, 5), 6).passed());
  CHECK(verify_block_diagonal(BernoulliParams(4, 3), 6).passed());
  CHECK(verify_block_diagonal(BernoulliParams(3, 5), 5).passed());
  CHECK(verify_block_equality(BernoulliParams(2, 5), 6, 3).passed());
  CHECK(verify_block_equality(BernoulliParams(3, 3), 5, 3).passed());
  CHECK(verify_commutation_even(BernoulliParams(2, 5), 5).passed());
  CHECK(verify_commutation_even(BernoulliParams(4, 3), 5).passed());
  CHECK(verify_odd_relations(BernoulliParams(3, 3), 4).passed());
  CHECK(verify_odd_relations(BernoulliParams(3, 5), 4).passed());
  CHECK(verify_odd_relations(BernoulliParams(1, 3), 5).passed());
  CHECK(verify_multiplication_identity(6).passed());
  CHECK(verify_all(BernoulliParams(2, 5), 5).passed());
}

TEST_CASE("suites reject parameters outside their scope") {
  CHECK_THROWS_AS(verify_commutation_even(BernoulliParams(3, 5), 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_odd_relations(BernoulliParams(2, 5), 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_block_diagonal(BernoulliParams(2), 4), std::invalid_argument);
  CHECK_THROWS_AS(analyze_w0_sparsity(0), std::invalid_argument);
  CHECK_THROWS_AS(analyze_w0_sparsity(6, 5), std::invalid_argument);
}

TEST_CASE("W0 sparsity pattern") {
  const SparsityAnalysis a = analyze_w0_sparsity(6);
  CHECK(a.report.passed());
  REQUIRE(a.strata.size() == 6);
  CHECK(a.strata[0] == TildeStratum::one_point());
  CHECK(a.strata[5] == TildeStratum::tilde(4));
  for (Eigen::Index r = 0; r < 6; ++r)
    for (Eigen::Index c = 0; c < 6; ++c)
      if (!a.expected_nonzero(r, c)) CHECK(a.nonzero_counts(r, c) == 0);
  CHECK(a.expected_nonzero(0, 1));
  CHECK(a.expected_nonzero(1, 0));
  CHECK(a.expected_nonzero(1, 5));
  CHECK(a.expected_nonzero(5, 1));
  CHECK_FALSE(a.expected_nonzero(1, 1));
  CHECK_FALSE(a.expected_nonzero(2, 2));
  CHECK_FALSE(a.expected_nonzero(0, 0));

  // The entry exactly 1 in (Gamma~_0, Gamma~_k) sits at xi' = 5 gamma'.
  const BernoulliParams params(2, 5);
  for (const char* g : {"101", "1001", "10001", "100001"}) {
    const DigitWord gamma = word(g);
    const auto xi = word_from_value(scale_value(gamma, params), params);
    REQUIRE(xi.has_value());
    CHECK(tilde_stratum_index(*xi, params) == TildeStratum::tilde(0));
    const MuHatValue v = u_entry(*xi, gamma, params, kDefaultTol).value;
    CHECK(v.value() == 1.0);
    CHECK(v.error_bound == 0.0);
  }
}
