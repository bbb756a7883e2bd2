#include "qseries/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qseries/errors.hpp"

namespace qseries {

QDifferenceEquation psi1_equation(const Psi1Params& params, const QContext& ctx) {
  const Complex q = ctx.q();
  const Complex a1 = params.a1(), a2 = params.a2(), b1 = params.b1();
  QDifferenceEquation eq;
  eq.order = 2;
  eq.q = q;
  eq.label = "2psi1 equation";
  eq.coeff = [=](int k, Complex x) -> Complex {
    switch (k) {
      case 2: return b1 / (q * q) - a1 * a2 * x;
      case 1: return -(1.0 / q - (a1 + a2) * x);
      case 0: return -x;
      default: return 0.0;
    }
  };
  return eq;
}

QDifferenceEquation heine_equation(Complex a, Complex b, Complex c, const QContext& ctx) {
  const Complex q = ctx.q();
  QDifferenceEquation eq;
  eq.order = 2;
  eq.q = q;
  eq.label = "Heine equation";
  eq.coeff = [=](int k, Complex x) -> Complex {
    switch (k) {
      case 2: return c - a * b * q * x;
      case 1: return -((c + q) - (a + b) * q * x);
      case 0: return q * (1.0 - x);
      default: return 0.0;
    }
  };
  return eq;
}

ResidualResult qde_residual(const QDifferenceEquation& eq, const std::function<Complex(Complex)>& u,
                            Complex x) {
  if (eq.order < 1 || !eq.coeff) {
    throw Error(ErrorKind::kInvalidParameter, "q-difference equation needs order >= 1");
  }
  ResidualResult out;
  Complex shift = x;
  for (int k = 0; k <= eq.order; ++k) {
    const Complex term = eq.coeff(k, x) * u(shift);
    out.sum += term;
    out.scale = std::max(out.scale, std::abs(term));
    shift *= eq.q;
  }
  if (out.scale == 0.0) {
    out.degenerate = true;
    out.residual = 0.0;
    return out;
  }
  out.residual = std::abs(out.sum) / out.scale;
  return out;
}

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 12> kNames{{
    {Identity::kTripleProduct, "triple_product"},
    {Identity::kThetaShift, "theta_shift"},
    {Identity::kThetaInversion, "theta_inversion"},
    {Identity::kSignQuasiperiod, "sign_quasiperiod"},
    {Identity::kRamanujan, "ramanujan"},
    {Identity::kWatson, "watson"},
    {Identity::kSlater, "slater_r"},
    {Identity::kCorollary, "corollary"},
    {Identity::kMainTheorem, "main_theorem"},
    {Identity::kEllipticity, "ellipticity"},
    {Identity::kQdeResidual, "qde_residual"},
    {Identity::kRoundtrip, "roundtrip"},
}};

}  // namespace

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> v;
    for (const auto& [id, name] : kNames) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string_view to_string(Identity id) {
  for (const auto& [i, name] : kNames) {
    if (i == id) return name;
  }
  return "unknown";
}

Identity identity_from_string(std::string_view name) {
  for (const auto& [i, n] : kNames) {
    if (n == name) return i;
  }
  throw Error(ErrorKind::kConfigError, "unknown identity '" + std::string(name) + "'");
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kSkip: return "skip";
    case Outcome::kFail: return "fail";
  }
  return "unknown";
}

SweepSummary summarize(const std::vector<PointRecord>& records) {
  SweepSummary s;
  for (const auto& r : records) {
    switch (r.outcome) {
      case Outcome::kPass: ++s.pass; break;
      case Outcome::kSkip: ++s.skip; break;
      case Outcome::kFail: ++s.fail; break;
    }
    if (r.outcome != Outcome::kSkip && std::isfinite(r.rel_residual)) {
      s.max_rel_residual = std::max(s.max_rel_residual, r.rel_residual);
    }
  }
  return s;
}

}  // namespace qseries
