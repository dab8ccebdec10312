#include "bspec/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>

namespace bspec {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Argument parse_argument(std::string_view text) {
  if (auto q = parse_quarter_int(text)) return *q;
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty argument");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    throw std::invalid_argument("cannot parse '" + s + "' as an exact fraction a/b (b | 4) or a decimal");
  return v;
}

void write_csv(const BlockMatrix& m, std::ostream& out) {
  out << "row_word,col_word,exact_zero,sign,magnitude,error_bound\n";
  for (Eigen::Index i = 0; i < m.row_count(); ++i) {
    for (Eigen::Index j = 0; j < m.col_count(); ++j) {
      const EntryValue e = m.entry(i, j);
      out << e.row.to_string() << ',' << e.col.to_string() << ',' << (e.value.exact_zero ? 1 : 0) << ','
          << e.value.sign << ',' << format_double(e.value.magnitude) << ',' << format_double(e.value.error_bound)
          << '\n';
    }
  }
}

void write_pgm(const BoolGrid& zero_mask, std::ostream& out) {
  out << "P5\n" << zero_mask.cols() << ' ' << zero_mask.rows() << "\n255\n";
  for (Eigen::Index i = 0; i < zero_mask.rows(); ++i)
    for (Eigen::Index j = 0; j < zero_mask.cols(); ++j) out.put(zero_mask(i, j) ? char(0) : char(255));
}

void write_svg(const BlockMatrix& m, std::ostream& out, int cell_px) {
  const auto w = m.col_count() * cell_px;
  const auto h = m.row_count() * cell_px;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << ' ' << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  for (Eigen::Index i = 0; i < m.row_count(); ++i)
    for (Eigen::Index j = 0; j < m.col_count(); ++j)
      if (!m.zero_mask()(i, j))
        out << "<rect x=\"" << j * cell_px << "\" y=\"" << i * cell_px << "\" width=\"" << cell_px << "\" height=\""
            << cell_px << "\" fill=\"black\"/>\n";
  for (std::size_t j = 1; j < m.cols().size(); ++j)
    if (stratum_index(m.cols()[j]) != stratum_index(m.cols()[j - 1]))
      out << "<line x1=\"" << j * static_cast<std::size_t>(cell_px) << "\" y1=\"0\" x2=\""
          << j * static_cast<std::size_t>(cell_px) << "\" y2=\"" << h << "\" stroke=\"red\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 1; i < m.rows().size(); ++i)
    if (stratum_index(m.rows()[i]) != stratum_index(m.rows()[i - 1]))
      out << "<line x1=\"0\" y1=\"" << i * static_cast<std::size_t>(cell_px) << "\" x2=\"" << w << "\" y2=\""
          << i * static_cast<std::size_t>(cell_px) << "\" stroke=\"red\" stroke-width=\"1\"/>\n";
  out << "</svg>\n";
}

nlohmann::json block_summary(const BlockMatrix& m, const BernoulliParams& params) {
  std::map<StratumIndex, std::size_t> row_sizes, col_sizes;
  for (DigitWord w : m.rows()) ++row_sizes[stratum_index(w)];
  for (DigitWord w : m.cols()) ++col_sizes[stratum_index(w)];
  std::map<std::pair<StratumIndex, StratumIndex>, std::size_t> nonzero;
  for (Eigen::Index i = 0; i < m.row_count(); ++i)
    for (Eigen::Index j = 0; j < m.col_count(); ++j)
      if (!m.zero_mask()(i, j)) ++nonzero[{stratum_index(m.rows()[static_cast<std::size_t>(i)]),
                                            stratum_index(m.cols()[static_cast<std::size_t>(j)])}];

  nlohmann::json j;
  j["n"] = params.n();
  if (params.p()) j["p"] = *params.p();
  j["rows"] = m.row_count();
  j["cols"] = m.col_count();
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& [rs, rn] : row_sizes) {
    for (const auto& [cs, cn] : col_sizes) {
      auto it = nonzero.find({rs, cs});
      const std::size_t count = it == nonzero.end() ? 0 : it->second;
      blocks.push_back({{"row_stratum", rs.to_string()},
                        {"col_stratum", cs.to_string()},
                        {"rows", rn},
                        {"cols", cn},
                        {"nonzero_entries", count},
                        {"all_zero", count == 0}});
    }
  }
  j["blocks"] = std::move(blocks);
  return j;
}

nlohmann::json to_json(const MuHatValue& v) {
  return {{"exact_zero", v.exact_zero},
          {"sign", v.sign},
          {"magnitude", v.magnitude},
          {"error_bound", v.error_bound},
          {"value", v.value()}};
}

nlohmann::json to_json(const CoeffVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& t : v.terms())
    entries.push_back({{"word", t.word.to_string()}, {"coefficient", t.coefficient}, {"error_bound", t.error_bound}});
  return {{"entries", std::move(entries)}, {"residual_bound", v.residual_bound()}};
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"suite", r.suite},
          {"passed", r.passed()},
          {"checks", r.checks},
          {"violations", r.violations},
          {"notes", r.notes}};
}

}  // namespace bspec
