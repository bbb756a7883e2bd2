#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseries/context.hpp"
#include "qseries/params.hpp"

namespace qseries {

/// sum_{k=0}^{order} coeff(k, x) u(q^k x) = 0
struct QDifferenceEquation {
  int order = 2;
  std::function<Complex(int, Complex)> coeff;
  std::string label;
  Complex q{0.0, 0.0};
};

/// Equation annihilating the divergent 2psi1(a1, a2; b1; q, x).
QDifferenceEquation psi1_equation(const Psi1Params& params, const QContext& ctx);

/// Heine's equation for 2phi1(a, b; c; q, x).
QDifferenceEquation heine_equation(Complex a, Complex b, Complex c, const QContext& ctx);

struct ResidualResult {
  double residual = 0.0;
  bool degenerate = false;  // every summand vanished
  Complex sum{0.0, 0.0};
  double scale = 0.0;  // largest summand magnitude
};

/// |sum| / max_k |coeff(k,x) u(q^k x)|. Evaluation errors from u propagate.
ResidualResult qde_residual(const QDifferenceEquation& eq, const std::function<Complex(Complex)>& u,
                            Complex x);

enum class Identity {
  kTripleProduct,
  kThetaShift,
  kThetaInversion,
  kSignQuasiperiod,
  kRamanujan,
  kWatson,
  kSlater,
  kCorollary,
  kMainTheorem,
  kEllipticity,
  kQdeResidual,
  kRoundtrip,
};

const std::vector<Identity>& all_identities();
std::string_view to_string(Identity id);
/// Throws Error(kConfigError) for unknown names.
Identity identity_from_string(std::string_view name);

/// One named parameter. Lists (Slater's a and b) use `list`.
struct ParamValue {
  Complex scalar{0.0, 0.0};
  std::vector<Complex> list;
  std::string text;  // symbolic choices such as the equation or the test function
  enum class Kind { kScalar, kList, kText } kind = Kind::kScalar;

  static ParamValue of(Complex v) { return {v, {}, {}, Kind::kScalar}; }
  static ParamValue of(std::vector<Complex> v) { return {{}, std::move(v), {}, Kind::kList}; }
  static ParamValue of(std::string v) { return {{}, {}, std::move(v), Kind::kText}; }

  bool operator==(const ParamValue&) const = default;
};

using ParamTuple = std::vector<std::pair<std::string, ParamValue>>;

/// Random points on a log-spiral annulus r_min <= |x| <= r_max, drawn for
/// every grid tuple that does not fix the point variable itself.
struct RandomPoints {
  int count = 0;
  double r_min = 0.5;
  double r_max = 2.0;
};

struct SweepConfig {
  Identity identity = Identity::kTripleProduct;
  std::vector<ParamTuple> parameter_grid;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  int precision_bits = QContext::kDoubleBits;
  RandomPoints random;
  /// Tolerances for secondary checks, keyed by check name (text before '[').
  /// A "confluent" entry is a coefficient: the record tolerance is that times b2.
  std::vector<std::pair<std::string, double>> check_tolerances;
};

/// "re,im" or a plain real. Throws Error(kConfigError) when malformed.
Complex parse_complex_literal(std::string_view text);

/// Throws Error(kConfigError) on malformed input.
SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::string& path);

/// Built-in grid used by verify-all.
SweepConfig default_config(Identity id, std::uint64_t seed);

enum class Outcome { kPass, kSkip, kFail };
std::string_view to_string(Outcome o);

struct PointRecord {
  std::size_t index = 0;
  std::string check;  // which relation this record tests
  ParamTuple inputs;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool lhs_converged = true;
  bool rhs_converged = true;
  long lhs_terms = 0;
  long rhs_terms = 0;
  Outcome outcome = Outcome::kSkip;
  std::string reason;

  bool operator==(const PointRecord&) const = default;
};

struct SweepSummary {
  std::size_t pass = 0;
  std::size_t skip = 0;
  std::size_t fail = 0;
  double max_rel_residual = 0.0;

  bool operator==(const SweepSummary&) const = default;
};

struct SweepReport {
  std::string identity;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  int precision_bits = QContext::kDoubleBits;
  std::vector<PointRecord> records;
  SweepSummary summary;
  double wall_seconds = 0.0;  // not serialized: reports must be byte-stable

  bool operator==(const SweepReport& o) const {
    return identity == o.identity && seed == o.seed && tolerance == o.tolerance &&
           precision_bits == o.precision_bits && records == o.records && summary == o.summary;
  }
};

/// Never throws for evaluation failures; they become skip or fail records.
SweepReport run_sweep(const SweepConfig& config);

/// Recomputes the summary block from the records.
SweepSummary summarize(const std::vector<PointRecord>& records);

enum class ReportFormat { kJson, kCsv };

std::string format_report(const SweepReport& report, ReportFormat format);
void write_report(const SweepReport& report, ReportFormat format, const std::string& path);
SweepReport parse_json_report(const std::string& json_text);

}  // namespace qseries
