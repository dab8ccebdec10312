#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "bspec/params.hpp"
#include "bspec/quarter_int.hpp"

using bspec::BernoulliParams;
using bspec::parse_quarter_int;
using bspec::QuarterInt;

TEST_CASE("quarter integers round-trip through text") {
  CHECK(parse_quarter_int("3/2")->quarters() == 6);
  CHECK(parse_quarter_int("-5/4")->quarters() == -5);
  CHECK(parse_quarter_int("6/4")->quarters() == 6);
  CHECK(parse_quarter_int("24")->quarters() == 96);
  CHECK(parse_quarter_int("-0")->quarters() == 0);
  CHECK_FALSE(parse_quarter_int("1/3"));
  CHECK_FALSE(parse_quarter_int("1/8"));
  CHECK_FALSE(parse_quarter_int("0.5"));
  CHECK_FALSE(parse_quarter_int("1/0"));
  CHECK_FALSE(parse_quarter_int(""));

  for (std::int64_t q = -40; q <= 40; ++q) {
    const auto t = QuarterInt::from_quarters(q);
    CHECK(parse_quarter_int(t.to_string()) == t);
    CHECK(parse_quarter_int(t.to_quarter_string()) == t);
  }
  CHECK(QuarterInt::from_quarters(6).to_string() == "3/2");
  CHECK(QuarterInt::from_quarters(8).to_string() == "2");
  CHECK(QuarterInt::from_quarters(-1).to_string() == "-1/4");
}

TEST_CASE("arithmetic is exact and overflow throws") {
  const auto a = QuarterInt::from_quarters(5);
  const auto b = QuarterInt::from_integer(3);
  CHECK((a + b).quarters() == 17);
  CHECK((a - b).quarters() == -7);
  CHECK((4 * a).quarters() == 20);
  CHECK((a * 4).is_integer());
  CHECK((-a).quarters() == -5);
  CHECK(a < b);
  CHECK(a.to_double() == 1.25);

  const auto big = QuarterInt::from_quarters(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + a, std::overflow_error);
  CHECK_THROWS_AS(big * 2, std::overflow_error);
  CHECK_THROWS_AS(-QuarterInt::from_quarters(std::numeric_limits<std::int64_t>::min()), std::overflow_error);
  CHECK_THROWS_AS(QuarterInt::from_integer(std::numeric_limits<std::int64_t>::max() / 2), std::overflow_error);
}

TEST_CASE("parameters validate n and p") {
  CHECK_THROWS_AS(BernoulliParams(0), std::invalid_argument);
  CHECK_THROWS_AS(BernoulliParams(-2), std::invalid_argument);
  CHECK_THROWS_AS(BernoulliParams(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(BernoulliParams(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(BernoulliParams(2).scale(), std::logic_error);

  const BernoulliParams p(3, 5);
  CHECK(p.base() == 6);
  CHECK(p.lambda() == doctest::Approx(1.0 / 6));
  CHECK(p.scale() == 5);
  CHECK(BernoulliParams(1).base() == 2);
}
