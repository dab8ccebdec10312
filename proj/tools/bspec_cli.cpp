// bspec: command-line front end for Bernoulli convolution spectra, the
// Cuntz isometries S0/S1 and the operator U e_gamma = e_{p gamma}.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bspec/exact_arith.hpp"
#include "bspec/io.hpp"
#include "bspec/matrix_lab.hpp"
#include "bspec/operators.hpp"
#include "bspec/spectrum.hpp"

namespace {

using namespace bspec;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 2;
  std::optional<int> p;
  int max_digits = 6;
  double tol = kDefaultTol;
  int terms = 0;  // 0: adaptive
  std::uint64_t seed = 20240601;
  std::string output_path;
  std::string format = "text";

  BernoulliParams params() const { return BernoulliParams(n, p); }
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_p = true) {
  cmd->add_option("--n", cfg.n, "scale parameter n (contraction 1/2n)")->capture_default_str();
  if (with_p) cmd->add_option("--p", cfg.p, "odd spectral scaling p >= 3");
  cmd->add_option("--tol", cfg.tol, "error tolerance for numeric magnitudes")->capture_default_str();
}

// Output goes to --output, else $BSPEC_OUTPUT_DIR/<default_name>, else stdout.
class Sink {
 public:
  Sink(const RunConfig& cfg, const std::string& default_name, bool binary) {
    std::string path = cfg.output_path;
    if (path.empty()) {
      if (const char* dir = std::getenv("BSPEC_OUTPUT_DIR"); dir && *dir)
        path = (std::filesystem::path(dir) / default_name).string();
    }
    if (!path.empty()) {
      file_.open(path, binary ? std::ios::out | std::ios::binary : std::ios::out);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
      path_ = path;
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  const std::string& path() const { return path_; }

 private:
  std::ofstream file_;
  std::string path_;
};

int cmd_muhat(const RunConfig& cfg, const std::string& t_text) {
  const BernoulliParams params = cfg.params();
  const Argument t = parse_argument(t_text);
  MuHatValue v;
  std::string shown;
  if (const auto* q = std::get_if<QuarterInt>(&t)) {
    v = mu_hat(*q, params, cfg.tol);
    shown = q->to_string() + " (" + q->to_quarter_string() + ", exact)";
  } else {
    const double x = std::get<double>(t);
    v = cfg.terms > 0 ? mu_hat_product(x, params, cfg.terms) : mu_hat_numeric(x, params, cfg.tol);
    shown = format_double(x) + " (numeric)";
  }
  if (cfg.format == "json") {
    auto j = to_json(v);
    j["t"] = t_text;
    j["n"] = params.n();
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "t           " << shown << '\n'
            << "n           " << params.n() << '\n'
            << "exact_zero  " << (v.exact_zero ? "true" : "false") << '\n'
            << "sign        " << (v.sign > 0 ? "+1" : "-1") << '\n'
            << "magnitude   " << format_double(v.magnitude) << '\n'
            << "error_bound " << format_double(v.error_bound) << '\n'
            << "value       " << format_double(v.value()) << '\n';
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& order) {
  const BernoulliParams params = cfg.params();
  const auto words = enumerate_gamma(cfg.max_digits, order == "strata" ? Ordering::strata_major
                                                                        : Ordering::value_ascending);
  auto tilde = [&](DigitWord w) -> std::string {
    if (params.n() != 2 || w.empty() || w.digit(0) != 1) return "";
    return tilde_stratum_index(w, params).to_string();
  };
  Sink sink(cfg, "spectrum." + (cfg.format == "text" ? std::string("txt") : cfg.format), false);
  auto& out = sink.stream();
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (DigitWord w : words) {
      nlohmann::json e{{"word", w.to_string()},
                       {"value", word_value(w, params).to_quarter_string()},
                       {"stratum", stratum_index(w).to_string()}};
      if (auto s = tilde(w); !s.empty()) e["tilde_stratum"] = s;
      if (params.p()) e["scaled_value"] = scale_value(w, params).to_quarter_string();
      arr.push_back(std::move(e));
    }
    out << arr.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "word,value,stratum,tilde_stratum\n";
    for (DigitWord w : words)
      out << w.to_string() << ',' << word_value(w, params).to_quarter_string() << ',' << stratum_index(w).to_string()
          << ',' << tilde(w) << '\n';
  } else {
    for (DigitWord w : words)
      out << (w.empty() ? std::string("(empty)") : w.to_string()) << '\t' << word_value(w, params).to_quarter_string()
          << '\t' << stratum_index(w).to_string() << (tilde(w).empty() ? "" : "\t" + tilde(w)) << '\n';
  }
  return 0;
}

int cmd_matrix(const RunConfig& cfg) {
  const BernoulliParams params = cfg.params();
  params.scale();
  const BlockMatrix m = build_u_matrix(params, cfg.max_digits, cfg.tol);
  const std::string stem = "u_n" + std::to_string(params.n()) + "_p" + std::to_string(params.scale()) + "_d" +
                           std::to_string(cfg.max_digits);
  const std::string ext = cfg.format == "text" ? "csv" : cfg.format;
  Sink sink(cfg, stem + "." + ext, cfg.format == "pgm");
  if (cfg.format == "csv" || cfg.format == "text")
    write_csv(m, sink.stream());
  else if (cfg.format == "json")
    sink.stream() << block_summary(m, params).dump(2) << '\n';
  else if (cfg.format == "pgm")
    write_pgm(m.zero_mask(), sink.stream());
  else if (cfg.format == "svg")
    write_svg(m, sink.stream());
  if (!sink.path().empty()) std::cerr << "wrote " << sink.path() << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int k_max) {
  const BernoulliParams params = cfg.params();
  VerificationReport report;
  if (suite == "cuntz") {
    report = verify_cuntz(params, cfg.max_digits);
  } else if (suite == "block-diagonal") {
    report = verify_block_diagonal(params, cfg.max_digits);
  } else if (suite == "block-equality") {
    report = verify_block_equality(params, cfg.max_digits, k_max);
  } else if (suite == "commute-even") {
    report = verify_commutation_even(params, cfg.max_digits);
  } else if (suite == "commute-odd") {
    report = verify_odd_relations(params, cfg.max_digits, cfg.tol);
  } else if (suite == "multiplication") {
    report = verify_multiplication_identity(cfg.max_digits, cfg.tol);
  } else if (suite == "w0-sparsity") {
    report = analyze_w0_sparsity(cfg.max_digits).report;
  } else {
    report = verify_all(params, cfg.max_digits, cfg.tol);
  }

  if (cfg.format == "json") {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks << " checks, "
              << report.violations.size() << " violations)\n";
    for (const auto& note : report.notes) std::cout << "  " << note << '\n';
    for (const auto& v : report.violations) std::cout << "VIOLATION\t" << report.suite << '\t' << v << '\n';
  }
  return report.passed() ? 0 : kExitViolation;
}

int cmd_parseval(const RunConfig& cfg, const std::string& t_text, const std::string& base) {
  const BernoulliParams params = cfg.params();
  const Argument arg = parse_argument(t_text);
  const double t = std::holds_alternative<double>(arg) ? std::get<double>(arg) : std::get<QuarterInt>(arg).to_double();
  const Basis basis = base == "pgamma" ? Basis::scaled : Basis::canonical;
  const auto table = parseval_table(t, basis, params, cfg.max_digits, cfg.tol);
  auto& out = std::cout;
  if (cfg.format == "csv") out << "max_digits,partial_sum,error_bound\n";
  bool ok = true;
  for (std::size_t d = 0; d < table.size(); ++d) {
    const bool bessel = table[d].sum <= 1.0 + table[d].error_bound;
    const bool monotone = d == 0 || table[d].sum >= table[d - 1].sum;
    ok = ok && bessel && monotone;
    if (cfg.format == "csv")
      out << d << ',' << format_double(table[d].sum) << ',' << format_double(table[d].error_bound) << '\n';
    else
      out << d << '\t' << format_double(table[d].sum) << '\t' << format_double(table[d].error_bound)
          << (bessel ? "" : "\tBESSEL-VIOLATION") << (monotone ? "" : "\tNOT-MONOTONE") << '\n';
  }
  return ok ? 0 : kExitViolation;
}

int cmd_chaos(const RunConfig& cfg, const std::string& t_text, std::size_t samples) {
  const BernoulliParams params = cfg.params();
  const Argument arg = parse_argument(t_text);
  const double t = std::holds_alternative<double>(arg) ? std::get<double>(arg) : std::get<QuarterInt>(arg).to_double();
  const MuHatValue product = std::holds_alternative<QuarterInt>(arg) ? mu_hat(std::get<QuarterInt>(arg), params, cfg.tol)
                                                                    : mu_hat_numeric(t, params, cfg.tol);
  std::cout << "samples\testimate\tstd_error\tproduct\tz\n";
  std::vector<std::size_t> sizes;
  for (std::size_t s = 100; s < samples; s *= 10) sizes.push_back(s);
  sizes.push_back(samples);
  for (std::size_t s : sizes) {
    const ChaosEstimate e = chaos_game_estimate(t, params, s, cfg.seed);
    const double z = e.std_error > 0 ? (e.estimate - product.value()) / e.std_error : 0.0;
    std::cout << s << '\t' << format_double(e.estimate) << '\t' << format_double(e.std_error) << '\t'
              << format_double(product.value()) << '\t' << format_double(z) << '\n';
  }
  return 0;
}

int cmd_expand(const RunConfig& cfg, const std::string& t_text, const std::string& word_text) {
  const BernoulliParams params = cfg.params();
  CoeffVector v;
  if (!word_text.empty() || t_text.empty()) {
    const std::string bits = word_text == "empty" ? std::string() : word_text;
    auto w = DigitWord::parse(bits);
    if (!w) throw std::invalid_argument("not a canonical bit string: '" + word_text + "'");
    v = apply_u(*w, params, cfg.max_digits, cfg.tol);
  } else {
    const Argument arg = parse_argument(t_text);
    v = std::holds_alternative<QuarterInt>(arg)
            ? expand_exponential(std::get<QuarterInt>(arg), params, cfg.max_digits, cfg.tol)
            : expand_exponential(std::get<double>(arg), params, cfg.max_digits, cfg.tol);
  }
  Sink sink(cfg, "expansion.json", false);
  sink.stream() << to_json(v).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernoulli convolution spectra, Cuntz isometries and the operator U"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string t_text, order = "value", base = "gamma", suite, word_text;
  int k_max = 3;
  std::size_t samples = 1000000;
  const std::vector<std::string> formats = {"csv", "json", "pgm", "svg", "text"};

  auto* muhat = app.add_subcommand("muhat", "evaluate mu_hat(t) with exact zero/sign and a certified bound");
  add_common(muhat, cfg, false);
  muhat->add_option("--t", t_text, "argument: integer, a/4-style fraction, or decimal")->required();
  muhat->add_option("--terms", cfg.terms, "fixed number of product factors for decimal t");
  muhat->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* spectrum = app.add_subcommand("spectrum", "list the canonical spectrum truncated by digit length");
  add_common(spectrum, cfg);
  spectrum->add_option("--max-digits", cfg.max_digits)->capture_default_str();
  spectrum->add_option("--order", order)->check(CLI::IsMember({"value", "strata"}))->capture_default_str();
  spectrum->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "csv", "json"}));
  spectrum->add_option("--output", cfg.output_path);

  auto* matrix = app.add_subcommand("matrix", "build U over the truncation in strata-major order");
  add_common(matrix, cfg);
  matrix->add_option("--max-digits", cfg.max_digits)->capture_default_str();
  matrix->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  matrix->add_option("--output", cfg.output_path);

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff no violations");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"cuntz", "block-diagonal", "block-equality", "commute-even", "commute-odd",
                             "multiplication", "w0-sparsity", "all"}));
  add_common(verify, cfg);
  verify->add_option("--max-digits", cfg.max_digits)->capture_default_str();
  verify->add_option("--k-max", k_max)->capture_default_str();
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* parseval = app.add_subcommand("parseval", "partial Parseval sums over increasing digit length");
  add_common(parseval, cfg);
  parseval->add_option("--t", t_text)->required();
  parseval->add_option("--base", base)->check(CLI::IsMember({"gamma", "pgamma"}))->capture_default_str();
  parseval->add_option("--max-digits", cfg.max_digits)->capture_default_str();
  parseval->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "csv"}));

  auto* chaos = app.add_subcommand("chaos", "Monte-Carlo chaos-game estimate of mu_hat(t)");
  add_common(chaos, cfg, false);
  chaos->add_option("--t", t_text)->required();
  chaos->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
  chaos->add_option("--seed", cfg.seed)->capture_default_str();

  auto* expand = app.add_subcommand("expand", "expansion of e_t, or of U e_gamma, as CoeffVector JSON");
  add_common(expand, cfg);
  auto* t_opt = expand->add_option("--t", t_text, "expand the exponential e_t");
  expand->add_option("--word", word_text, "expand U e_gamma for this bit string ('empty' for gamma = 0)")
      ->excludes(t_opt);
  expand->add_option("--max-digits", cfg.max_digits)->capture_default_str();
  expand->add_option("--output", cfg.output_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*muhat) return cmd_muhat(cfg, t_text);
    if (*spectrum) return cmd_spectrum(cfg, order);
    if (*matrix) return cmd_matrix(cfg);
    if (*verify) return cmd_verify(cfg, suite, k_max);
    if (*parseval) return cmd_parseval(cfg, t_text, base);
    if (*chaos) return cmd_chaos(cfg, t_text, samples);
    if (*expand) return cmd_expand(cfg, t_text, word_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
