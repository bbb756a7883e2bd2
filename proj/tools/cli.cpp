#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "qseries/connection.hpp"
#include "qseries/errors.hpp"
#include "qseries/qcore.hpp"
#include "qseries/resummation.hpp"
#include "qseries/verify.hpp"

namespace qseries::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* const kScalarNames[] = {"q", "a1", "a2", "b1", "a", "b", "c", "lambda", "x", "z", "k", "n"};
const char* const kListNames[] = {"a-list", "b-list", "b2-list"};

/// Named parameters shared by eval and check.
class Params {
 public:
  void attach(CLI::App* cmd) {
    for (const char* n : kScalarNames) {
      opts_[n] = cmd->add_option(std::string("--") + n, raw_[n], "decimal or \"re,im\"");
    }
    for (const char* n : kListNames) {
      opts_[n] = cmd->add_option(std::string("--") + n, raw_[n], "values separated by ';'");
    }
    opts_["equation"] = cmd->add_option("--equation", raw_["equation"], "psi1 or heine (check)");
    opts_["function"] = cmd->add_option("--function", raw_["function"], "test function (check)");
    opts_["branch"] = cmd->add_option("--branch", raw_["branch"], "auto, direct or continuation")
                          ->check(CLI::IsMember({"auto", "direct", "continuation"}));
    opts_["form"] = cmd->add_option("--form", raw_["form"], "complete or omit-ratio (c1, c2)")
                        ->check(CLI::IsMember({"complete", "omit-ratio"}));
  }

  bool has(const std::string& name) const { return opts_.at(name)->count() > 0; }

  /// Parses every literal that was given, before any computation.
  void validate() {
    for (const char* n : kScalarNames) {
      if (has(n)) scalars_[n] = literal(n, raw_[n]);
    }
    for (const char* n : kListNames) {
      if (!has(n)) continue;
      std::vector<Complex> v;
      std::stringstream ss(raw_[n]);
      std::string item;
      while (std::getline(ss, item, ';')) v.push_back(literal(n, item));
      if (v.empty()) throw UsageError(std::string("--") + n + " is empty");
      lists_[n] = std::move(v);
    }
  }

  Complex scalar(const std::string& name, const std::string& cmd) const {
    auto it = scalars_.find(name);
    if (it == scalars_.end()) throw UsageError(cmd + " needs --" + name);
    return it->second;
  }

  const std::vector<Complex>& list(const std::string& name, const std::string& cmd) const {
    auto it = lists_.find(name);
    if (it == lists_.end()) throw UsageError(cmd + " needs --" + name);
    return it->second;
  }

  std::string text(const std::string& name, const std::string& fallback) const {
    return has(name) ? raw_.at(name) : fallback;
  }

  /// Everything given on the command line, as a sweep grid tuple.
  ParamTuple tuple() const {
    ParamTuple t;
    for (const char* n : kScalarNames) {
      if (has(n)) t.emplace_back(n, ParamValue::of(scalars_.at(n)));
    }
    const std::pair<const char*, const char*> lists[] = {{"a-list", "a"}, {"b-list", "b"}, {"b2-list", "b2"}};
    for (const auto& [flag, key] : lists) {
      if (has(flag)) t.emplace_back(key, ParamValue::of(lists_.at(flag)));
    }
    for (const char* n : {"equation", "function"}) {
      if (has(n)) t.emplace_back(n, ParamValue::of(raw_.at(n)));
    }
    return t;
  }

 private:
  static Complex literal(const std::string& name, const std::string& text) {
    try {
      return parse_complex_literal(text);
    } catch (const Error& e) {
      throw UsageError("--" + name + ": " + e.what());
    }
  }

  std::map<std::string, std::string> raw_;
  std::map<std::string, CLI::Option*> opts_;
  std::map<std::string, Complex> scalars_;
  std::map<std::string, std::vector<Complex>> lists_;
};

std::string value_line(Complex v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g %+.17gi", v.real(), v.imag());
  return buf;
}

int print_value(const TruncatedValue& v, const std::vector<std::string>& warnings, std::ostream& out) {
  out << value_line(v.value) << '\n'
      << "converged=" << (v.converged ? "true" : "false") << '\n'
      << "terms_pos=" << v.terms_used_pos << '\n'
      << "terms_neg=" << v.terms_used_neg << '\n'
      << "last_term_mag=" << v.last_term_mag << '\n';
  if (!v.note.empty()) out << "note=" << v.note << '\n';
  for (const auto& w : warnings) out << "warning=" << w << '\n';
  return v.converged ? kExitOk : kExitNotConverged;
}

long integer(Complex v, const char* what) {
  if (v.imag() != 0.0 || v.real() != std::round(v.real())) {
    throw UsageError(std::string(what) + " must be an integer");
  }
  return static_cast<long>(v.real());
}

int cmd_eval(const std::string& fn, const Params& p, int bits, std::ostream& out) {
  const std::string cmd = "eval " + fn;
  auto ctx = [&] { return QContext(p.scalar("q", cmd), bits); };
  auto x = [&] { return p.scalar("x", cmd); };
  auto psi1 = [&](const QContext& c) {
    return Psi1Params(p.scalar("a1", cmd), p.scalar("a2", cmd), p.scalar("b1", cmd), c);
  };
  std::vector<std::string> warnings;

  if (fn == "psi2x1") {
    throw UsageError(
        "the bilateral series 2psi1(a1,a2;b1;q,x) diverges for every x != 0 (its coefficients grow "
        "like q^{-n(n-1)/2}); use 'eval resum2psi1' for its q-Borel-Laplace sum");
  }
  if (fn == "theta") return print_value(theta(x(), ctx()), warnings, out);
  if (fn == "qpochhammer") {
    TruncatedValue v;
    v.value = qpochhammer(p.scalar("a", cmd), ctx(), integer(p.scalar("n", cmd), "--n"));
    return print_value(v, warnings, out);
  }
  if (fn == "qpochhammer_inf") return print_value(qpochhammer_inf(p.scalar("a", cmd), ctx()), warnings, out);
  if (fn == "phi" || fn == "psi" || fn == "slater") {
    const QContext c = ctx();
    const auto& a = p.list("a-list", cmd);
    const auto& b = p.list("b-list", cmd);
    if (fn == "phi") return print_value(phi_series(SeriesSpec::phi(a, b), c, x()), warnings, out);
    if (fn == "psi") return print_value(psi_series(SeriesSpec::psi(a, b), c, x()), warnings, out);
    return print_value(slater_rhs(SlaterParams(a, b, c), c, x()), warnings, out);
  }
  if (fn == "ramanujan") {
    return print_value(ramanujan_product(p.scalar("a", cmd), p.scalar("b", cmd), ctx(), p.scalar("z", cmd)),
                       warnings, out);
  }
  if (fn == "watson") {
    return print_value(
        watson_rhs(p.scalar("a", cmd), p.scalar("b", cmd), p.scalar("c", cmd), ctx(), x()), warnings,
        out);
  }
  if (fn == "borel2psi2") {
    const std::string b = p.text("branch", "auto");
    const BorelBranch branch = b == "direct"         ? BorelBranch::kDirect
                               : b == "continuation" ? BorelBranch::kContinuation
                                                     : BorelBranch::kAuto;
    const QContext c = ctx();
    return print_value(borel_image_2psi2(psi1(c), c, x(), branch), warnings, out);
  }
  if (fn == "corollary") {
    const QContext c = ctx();
    return print_value(corollary_2psi2_rhs(psi1(c), c, x()), warnings, out);
  }
  if (fn == "v1" || fn == "v2") {
    const QContext c = ctx();
    const SolutionIndex which = fn == "v1" ? SolutionIndex::kFirst : SolutionIndex::kSecond;
    return print_value(v_solution(psi1(c), c, which, x()), warnings, out);
  }
  if (fn == "resum2psi1" || fn == "main_rhs" || fn == "c1" || fn == "c2") {
    const QContext c = ctx();
    const Psi1Params params = psi1(c);
    const SpiralSpec spiral(p.scalar("lambda", cmd), c);
    const Complex xv = x();
    if (std::abs(xv) <= params.certified_radius()) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "|x| = %.6g is not above |b1/(a1 a2)| = %.6g; the q-Laplace sum is not "
                    "expected to converge here",
                    std::abs(xv), params.certified_radius());
      warnings.emplace_back(buf);
    }
    if (fn == "resum2psi1") return print_value(resum_2psi1(params, spiral, xv), warnings, out);
    if (fn == "main_rhs") return print_value(main_theorem_rhs(params, spiral, xv), warnings, out);
    const CoefficientForm form = p.text("form", "complete") == "omit-ratio"
                                     ? CoefficientForm::kOmitQajRatio
                                     : CoefficientForm::kComplete;
    const ConnectionCoefficientSpec spec{
        params, spiral, fn == "c1" ? SolutionIndex::kFirst : SolutionIndex::kSecond, form};
    warnings.clear();
    return print_value(connection_coefficient(spec, xv), warnings, out);
  }
  throw UsageError("unknown function '" + fn + "'");
}

void apply_tolerance(SweepConfig& cfg, double tolerance) {
  cfg.tolerance = tolerance;
  // One explicit tolerance governs every check; the confluent coefficient is
  // a slope, so it is left alone.
  std::erase_if(cfg.check_tolerances, [](const auto& kv) { return kv.first != "confluent"; });
}

void print_summary(const SweepReport& r, std::ostream& out) {
  out << r.identity << ": pass=" << r.summary.pass << " skip=" << r.summary.skip
      << " fail=" << r.summary.fail << " max_rel_residual=" << r.summary.max_rel_residual << '\n';
  for (const auto& rec : r.records) {
    if (rec.outcome != Outcome::kFail) continue;
    out << "  FAIL " << r.identity << " #" << rec.index << ' ' << rec.check
        << " rel_residual=" << rec.rel_residual << " tolerance=" << rec.tolerance
        << " reason=" << rec.reason << '\n';
  }
}

ReportFormat format_of(const std::string& f) { return f == "csv" ? ReportFormat::kCsv : ReportFormat::kJson; }

int cmd_check(const std::string& name, const Params& p, int bits, std::optional<double> tolerance,
              std::ostream& out) {
  SweepConfig cfg = default_config(identity_from_string(name), 0);
  cfg.parameter_grid = {p.tuple()};
  cfg.random = {};
  cfg.precision_bits = bits;
  if (tolerance) apply_tolerance(cfg, *tolerance);
  const SweepReport r = run_sweep(cfg);
  bool not_converged = false;
  bool failed = false;
  for (const auto& rec : r.records) {
    out << "check=" << rec.check << " outcome=" << to_string(rec.outcome) << " lhs=" << value_line(rec.lhs)
        << " rhs=" << value_line(rec.rhs) << " rel_residual=" << rec.rel_residual
        << " tolerance=" << rec.tolerance;
    if (!rec.reason.empty()) out << " reason=" << rec.reason;
    out << '\n';
    if (rec.outcome == Outcome::kPass) continue;
    if (rec.outcome == Outcome::kFail && !(rec.lhs_converged && rec.rhs_converged)) {
      not_converged = true;
    } else {
      failed = true;
    }
  }
  if (failed) return kExitUsage;
  return not_converged ? kExitNotConverged : kExitOk;
}

int run_impl(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical q-series: evaluation, resummation and identity verification", "qseries"};
  app.require_subcommand(1);

  int bits = QContext::kDoubleBits;
  auto precision = [&](CLI::App* cmd) {
    cmd->add_option("--precision", bits, "working precision in bits (53 or 113)")
        ->check(CLI::IsMember({QContext::kDoubleBits, QContext::kQuadBits}));
  };

  Params params;
  std::string name;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point");
  eval->add_option("name", name, "theta, qpochhammer, qpochhammer_inf, phi, psi, borel2psi2, "
                                     "resum2psi1, ramanujan, watson, slater, corollary, v1, v2, "
                                     "c1, c2, main_rhs")
      ->required();
  params.attach(eval);
  precision(eval);

  std::optional<double> tolerance;
  CLI::App* check = app.add_subcommand("check", "check one identity at one parameter point");
  check->add_option("identity", name, "identity name")->required();
  Params check_params;
  check_params.attach(check);
  precision(check);
  check->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);

  std::string config_path, out_path, format = "json";
  std::optional<std::uint64_t> seed_override;
  CLI::App* sweep = app.add_subcommand("sweep", "run a sweep from a json config file");
  sweep->add_option("--config", config_path)->required();
  sweep->add_option("--out", out_path, "report path (default: standard output)");
  sweep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed_override);

  std::string out_dir = "reports";
  std::uint64_t seed = 1;
  CLI::App* all = app.add_subcommand("verify-all", "run every identity sweep on the built-in grids");
  all->add_option("--out-dir", out_dir);
  all->add_option("--seed", seed);
  all->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);
  all->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  precision(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      params.validate();
      return cmd_eval(name, params, bits, out);
    }
    if (check->parsed()) {
      check_params.validate();
      return cmd_check(name, check_params, bits, tolerance, out);
    }
    if (sweep->parsed()) {
      SweepConfig cfg = load_sweep_config(config_path);
      if (tolerance) apply_tolerance(cfg, *tolerance);
      if (seed_override) cfg.seed = *seed_override;
      const SweepReport r = run_sweep(cfg);
      if (out_path.empty()) {
        out << format_report(r, format_of(format));
      } else {
        write_report(r, format_of(format), out_path);
      }
      print_summary(r, out_path.empty() ? err : out);
      return r.summary.fail == 0 ? kExitOk : kExitUsage;
    }
    // verify-all
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorKind::kIoError, "cannot create '" + out_dir + "': " + ec.message());
    std::vector<std::string> failing;
    for (Identity id : all_identities()) {
      SweepConfig cfg = default_config(id, seed);
      cfg.precision_bits = bits;
      if (tolerance) apply_tolerance(cfg, *tolerance);
      const SweepReport r = run_sweep(cfg);
      const std::string ext = format == "csv" ? ".csv" : ".json";
      write_report(r, format_of(format), (std::filesystem::path(out_dir) / (r.identity + ext)).string());
      print_summary(r, out);
      if (r.summary.fail > 0) failing.push_back(r.identity);
    }
    if (failing.empty()) {
      out << "all identities pass\n";
      return kExitOk;
    }
    out << "failures in:";
    for (const auto& f : failing) out << ' ' << f;
    out << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::kMaxTermsExceeded ? kExitNotConverged : kExitUsage;
  }
}

}  // namespace

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  try {
    return run_impl(argc, argv, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qseries::cli
