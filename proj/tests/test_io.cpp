#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "bspec/io.hpp"

using namespace bspec;

namespace {

BlockMatrix small_matrix() {
  const BernoulliParams params(2, 5);
  return build_u_matrix(params, 2, kDefaultTol);
}

}  // namespace

TEST_CASE("arguments parse exact when they can") {
  CHECK(std::get<QuarterInt>(parse_argument("3/2")).quarters() == 6);
  CHECK(std::get<QuarterInt>(parse_argument("-7")).quarters() == -28);
  CHECK(std::get<double>(parse_argument("0.3")) == 0.3);
  CHECK(std::get<double>(parse_argument("1e-2")) == 0.01);
  CHECK_THROWS_AS(parse_argument("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_argument(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_argument("inf"), std::invalid_argument);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("CSV export") {
  std::ostringstream out;
  write_csv(small_matrix(), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "row_word,col_word,exact_zero,sign,magnitude,error_bound");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 16);
  CHECK(out.str().find("\n,,0,1,1,0\n") != std::string::npos);
}

TEST_CASE("PGM export is binary P5") {
  const BlockMatrix m = small_matrix();
  std::ostringstream out;
  write_pgm(m.zero_mask(), out);
  const std::string s = out.str();
  const std::string header = "P5\n4 4\n255\n";
  REQUIRE(s.size() == header.size() + 16);
  CHECK(s.substr(0, header.size()) == header);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(static_cast<unsigned char>(s[header.size() + 4 * i + j]) == (m.zero_mask()(i, j) ? 0 : 255));
}

TEST_CASE("SVG export") {
  std::ostringstream out;
  write_svg(small_matrix(), out, 10);
  const std::string s = out.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("width=\"40\"") != std::string::npos);
  CHECK(s.find("stroke=\"red\"") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("JSON summaries") {
  const BernoulliParams params(2, 5);
  const auto j = block_summary(small_matrix(), params);
  CHECK(j["n"] == 2);
  CHECK(j["p"] == 5);
  CHECK(j["rows"] == 4);
  for (const auto& b : j["blocks"])
    if (b["row_stratum"] != b["col_stratum"]) CHECK(b["all_zero"] == true);

  const auto v = to_json(MuHatValue::exact(-1));
  CHECK(v["value"] == -1.0);
  CHECK(v["exact_zero"] == false);

  CoeffVector c;
  c.add(DigitWord::from_bits(3), 0.5, 1e-13);
  const auto cj = to_json(c);
  CHECK(cj["entries"][0]["word"] == "11");
  CHECK(cj["entries"][0]["coefficient"] == 0.5);

  VerificationReport r;
  r.suite = "demo";
  r.record(false, [] { return std::string("broken"); });
  const auto rj = to_json(r);
  CHECK(rj["passed"] == false);
  CHECK(rj["violations"][0] == "broken");
}
