#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "bspec/exact_arith.hpp"
#include "bspec/matrix_lab.hpp"
#include "bspec/operators.hpp"
#include "bspec/report.hpp"

namespace bspec {

/// Shortest round-trip decimal for a double ("%.17g"); stable across runs.
std::string format_double(double v);

/// A command-line argument: exact when written as an integer or a fraction
/// whose reduced denominator divides 4, numeric otherwise ("0.3", "1e-2").
using Argument = std::variant<QuarterInt, double>;
/// Throws std::invalid_argument when the text is neither.
Argument parse_argument(std::string_view text);

/// CSV with header row_word,col_word,exact_zero,sign,magnitude,error_bound,
/// one line per entry in row-major order.
void write_csv(const BlockMatrix& m, std::ostream& out);

/// Binary PGM (P5), one byte per entry: 0 exact zero, 255 nonzero.
void write_pgm(const BoolGrid& zero_mask, std::ostream& out);

/// SVG grid of the zero mask (filled cell = nonzero), with stratum
/// boundaries drawn between consecutive strata of the row/column index sets.
void write_svg(const BlockMatrix& m, std::ostream& out, int cell_px = 6);

/// Per stratum pair: sizes and count of entries not exactly zero.
nlohmann::json block_summary(const BlockMatrix& m, const BernoulliParams& params);

nlohmann::json to_json(const MuHatValue& v);
/// {"entries": [{"word", "coefficient", "error_bound"}...], "residual_bound"}
nlohmann::json to_json(const CoeffVector& v);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace bspec
