#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "qseries/connection.hpp"
#include "qseries/errors.hpp"
#include "qseries/qcore.hpp"
#include "qseries/resummation.hpp"
#include "qseries/verify.hpp"

namespace qseries {
namespace {

// ---- parameter access ----------------------------------------------------

const ParamValue* find(const ParamTuple& t, std::string_view name) {
  for (const auto& [k, v] : t) {
    if (k == name) return &v;
  }
  return nullptr;
}

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::kConfigError, msg); }

Complex scalar(const ParamTuple& t, std::string_view name) {
  const ParamValue* v = find(t, name);
  if (!v) config_error("missing parameter '" + std::string(name) + "'");
  if (v->kind != ParamValue::Kind::kScalar) {
    config_error("parameter '" + std::string(name) + "' must be a number");
  }
  return v->scalar;
}

const std::vector<Complex>& list(const ParamTuple& t, std::string_view name) {
  const ParamValue* v = find(t, name);
  if (!v || v->kind != ParamValue::Kind::kList) {
    config_error("parameter '" + std::string(name) + "' must be a list");
  }
  return v->list;
}

std::string text(const ParamTuple& t, std::string_view name) {
  const ParamValue* v = find(t, name);
  if (!v || v->kind != ParamValue::Kind::kText) {
    config_error("parameter '" + std::string(name) + "' must be a string");
  }
  return v->text;
}

long integer(const ParamTuple& t, std::string_view name) {
  const Complex v = scalar(t, name);
  const double r = std::round(v.real());
  if (v.imag() != 0.0 || r != v.real()) config_error(std::string(name) + " must be an integer");
  return static_cast<long>(r);
}

Complex ipow(Complex q, long k) {
  Complex out = 1.0;
  const Complex base = k < 0 ? 1.0 / q : q;
  for (long i = 0; i < std::labs(k); ++i) out *= base;
  return out;
}

// ---- record emission -------------------------------------------------------

struct Sides {
  TruncatedValue lhs;
  TruncatedValue rhs;
  double rel = -1.0;  // negative: use the default relative residual
  double tolerance = -1.0;  // negative: use the config
  std::string failure;  // non-empty forces a fail
};

TruncatedValue exact(Complex v) {
  TruncatedValue t;
  t.value = v;
  return t;
}

double relative(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  if (s == 0.0) return 0.0;
  return std::abs(a - b) / s;
}

class Emitter {
 public:
  Emitter(const SweepConfig& cfg, std::vector<PointRecord>& out) : cfg_(cfg), out_(out) {}

  void set_inputs(const ParamTuple& t) { inputs_ = &t; }

  double tolerance_for(const std::string& check) const {
    const std::string key = check.substr(0, check.find('['));
    for (const auto& [k, v] : cfg_.check_tolerances) {
      if (k == key) return v;
    }
    return cfg_.tolerance;
  }

  void check(const std::string& name, const std::function<Sides()>& fn) {
    PointRecord r;
    r.index = out_.size();
    r.check = name;
    r.inputs = *inputs_;
    r.tolerance = tolerance_for(name);
    try {
      const Sides s = fn();
      r.lhs = s.lhs.value;
      r.rhs = s.rhs.value;
      r.abs_residual = std::abs(r.lhs - r.rhs);
      r.rel_residual = s.rel >= 0.0 ? s.rel : relative(r.lhs, r.rhs);
      if (s.tolerance >= 0.0) r.tolerance = s.tolerance;
      r.lhs_converged = s.lhs.converged;
      r.rhs_converged = s.rhs.converged;
      r.lhs_terms = s.lhs.terms_used_pos + s.lhs.terms_used_neg;
      r.rhs_terms = s.rhs.terms_used_pos + s.rhs.terms_used_neg;
      const bool finite = std::isfinite(r.rel_residual) && std::isfinite(r.lhs.real()) &&
                          std::isfinite(r.lhs.imag()) && std::isfinite(r.rhs.real()) &&
                          std::isfinite(r.rhs.imag());
      const bool ok = finite && r.lhs_converged && r.rhs_converged && s.failure.empty() &&
                      r.rel_residual <= r.tolerance;
      r.outcome = ok ? Outcome::kPass : Outcome::kFail;
      if (!s.failure.empty()) {
        r.reason = s.failure;
      } else if (!r.lhs_converged || !r.rhs_converged) {
        r.reason = "not converged";
        for (const auto* t : {&s.lhs, &s.rhs}) {
          if (!t->note.empty()) r.reason += ": " + t->note;
        }
      } else if (!finite) {
        r.reason = "non-finite value";
      } else if (!ok) {
        r.reason = "residual above tolerance";
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kConfigError) throw;
      r.outcome = e.is_domain_error() ? Outcome::kSkip : Outcome::kFail;
      r.reason = std::string(to_string(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.outcome = Outcome::kFail;
      r.reason = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  const SweepConfig& cfg_;
  std::vector<PointRecord>& out_;
  const ParamTuple* inputs_ = nullptr;
};

/// Residual record for sum_k coeff(k,x) u(q^k x); tracks convergence of u.
Sides residual_sides(const QDifferenceEquation& eq, const std::function<TruncatedValue(Complex)>& u,
                     Complex x) {
  bool converged = true;
  long terms = 0;
  std::string note;
  const ResidualResult res = qde_residual(
      eq,
      [&](Complex y) {
        const TruncatedValue v = u(y);
        if (!v.converged) {
          converged = false;
          if (note.empty()) note = v.note;
        }
        terms += v.terms_used_pos + v.terms_used_neg;
        return v.value;
      },
      x);
  Sides s;
  s.lhs.value = res.sum;
  s.lhs.converged = converged;
  s.lhs.terms_used_pos = terms;
  s.lhs.note = note;
  s.rel = res.residual;
  if (res.degenerate) s.rhs.note = "degenerate";
  return s;
}

// ---- identities -------------------------------------------------------------

const char* point_variable(Identity id) { return id == Identity::kRamanujan ? "z" : "x"; }

Psi1Params psi1_params(const ParamTuple& t, const QContext& ctx) {
  return Psi1Params(scalar(t, "a1"), scalar(t, "a2"), scalar(t, "b1"), ctx);
}

void evaluate(Identity id, const ParamTuple& t, int bits, Emitter& emit) {
  const QContext ctx(scalar(t, "q"), bits);
  const Complex q = ctx.q();

  switch (id) {
    case Identity::kTripleProduct: {
      const Complex x = scalar(t, "x");
      emit.check("triple_product", [&] {
        return Sides{theta(x, ctx), qpochhammer_multi({q, -x, -q / x}, ctx)};
      });
      return;
    }
    case Identity::kThetaShift: {
      const Complex x = scalar(t, "x");
      const long k = integer(t, "k");
      emit.check("theta_shift", [&] {
        const TruncatedValue base = theta(x, ctx);
        TruncatedValue rhs = base;
        rhs.value = ipow(q, -k * (k - 1) / 2) * ipow(x, -k) * base.value;
        return Sides{theta(ipow(q, k) * x, ctx), rhs};
      });
      return;
    }
    case Identity::kThetaInversion: {
      const Complex x = scalar(t, "x");
      emit.check("theta_inversion", [&] {
        TruncatedValue rhs = theta(x, ctx);
        rhs.value /= x;
        return Sides{theta(1.0 / x, ctx), rhs};
      });
      return;
    }
    case Identity::kSignQuasiperiod: {
      const Complex x = scalar(t, "x");
      const Complex lambda = scalar(t, "lambda");
      auto u = [&](Complex y) {
        const TruncatedValue num = theta(-lambda * y, ctx);
        const TruncatedValue den = theta(lambda * y, ctx);
        if (den.value == 0.0) throw Error(ErrorKind::kThetaZero, "theta(lambda x) vanishes");
        TruncatedValue out = num;
        out.value = num.value / den.value;
        out.converged = num.converged && den.converged;
        return out;
      };
      emit.check("sign_quasiperiod", [&] {
        TruncatedValue rhs = u(x);
        rhs.value = -rhs.value;
        return Sides{u(q * x), rhs};
      });
      return;
    }
    case Identity::kRamanujan: {
      const Complex a = scalar(t, "a"), b = scalar(t, "b"), z = scalar(t, "z");
      emit.check("ramanujan", [&] {
        return Sides{psi_series(SeriesSpec::psi({a}, {b}), ctx, z), ramanujan_product(a, b, ctx, z)};
      });
      return;
    }
    case Identity::kWatson: {
      const Complex a = scalar(t, "a"), b = scalar(t, "b"), c = scalar(t, "c"), x = scalar(t, "x");
      const auto phi = [&](Complex y) { return phi_series(SeriesSpec::phi({a, b}, {c}), ctx, y); };
      const auto rhs = [&](Complex y) { return watson_rhs(a, b, c, ctx, y); };
      emit.check("watson", [&] { return Sides{phi(x), rhs(x)}; });
      const QDifferenceEquation heine = heine_equation(a, b, c, ctx);
      emit.check("heine_lhs", [&] { return residual_sides(heine, phi, x); });
      emit.check("heine_rhs", [&] { return residual_sides(heine, rhs, x); });
      return;
    }
    case Identity::kSlater: {
      const Complex x = scalar(t, "x");
      emit.check("slater_r", [&] {
        const SlaterParams p(list(t, "a"), list(t, "b"), ctx);
        const TruncatedValue pre = slater_prefactor(p, ctx, x);
        // The annulus check lives in slater_rhs; evaluate it first so that
        // points outside the domain are skipped rather than failed.
        const TruncatedValue rhs = slater_rhs(p, ctx, x);
        TruncatedValue lhs = psi_series(SeriesSpec::psi(p.a(), p.b()), ctx, x);
        lhs.converged = lhs.converged && pre.converged;
        lhs.value *= pre.value;
        return Sides{lhs, rhs};
      });
      return;
    }
    case Identity::kCorollary: {
      const Complex x = scalar(t, "x");
      const Psi1Params p = psi1_params(t, ctx);
      emit.check("corollary", [&] {
        return Sides{psi_series(SeriesSpec::psi({p.a1(), p.a2()}, {p.b1(), 0.0}), ctx, x),
                     corollary_2psi2_rhs(p, ctx, x)};
      });
      // Slater's r = 2 formula with b2 -> 0; agreement has to improve with b2.
      const ParamValue* b2s = find(t, "b2");
      if (!b2s) return;
      if (b2s->kind != ParamValue::Kind::kList) config_error("b2 must be a list");
      const double coefficient = emit.tolerance_for("confluent");
      double previous = INFINITY;
      for (const Complex& b2 : b2s->list) {
        char name[64];
        std::snprintf(name, sizeof name, "confluent[b2=%.0e]", std::abs(b2));
        emit.check(name, [&] {
          const SlaterParams sp({p.a1(), p.a2()}, {p.b1(), b2}, ctx);
          const TruncatedValue pre = slater_prefactor(sp, ctx, x);
          TruncatedValue lhs = slater_rhs(sp, ctx, x);
          lhs.value /= pre.value;
          lhs.converged = lhs.converged && pre.converged;
          Sides s{lhs, corollary_2psi2_rhs(p, ctx, x)};
          s.tolerance = coefficient * std::abs(b2);
          const double rel = relative(s.lhs.value, s.rhs.value);
          if (!(rel < previous)) s.failure = "confluent limit not monotone";
          previous = rel;
          return s;
        });
      }
      return;
    }
    case Identity::kMainTheorem: {
      const Complex x = scalar(t, "x");
      const Psi1Params p = psi1_params(t, ctx);
      const SpiralSpec spiral(scalar(t, "lambda"), ctx);
      const auto resum = [&](Complex y) { return resum_2psi1(p, spiral, y); };
      const auto rhs = [&](Complex y) { return main_theorem_rhs(p, spiral, y); };
      emit.check("main_theorem", [&] { return Sides{resum(x), rhs(x)}; });
      emit.check("spiral_shift", [&] {
        return Sides{resum_2psi1(p, spiral.shifted(1), x), resum(x)};
      });
      const QDifferenceEquation eq = psi1_equation(p, ctx);
      emit.check("qde_resummed", [&] { return residual_sides(eq, resum, x); });
      emit.check("qde_rhs", [&] { return residual_sides(eq, rhs, x); });
      return;
    }
    case Identity::kEllipticity: {
      const Complex x = scalar(t, "x");
      const Psi1Params p = psi1_params(t, ctx);
      const SpiralSpec spiral(scalar(t, "lambda"), ctx);
      for (const SolutionIndex which : {SolutionIndex::kFirst, SolutionIndex::kSecond}) {
        const ConnectionCoefficientSpec spec{p, spiral, which, CoefficientForm::kComplete};
        emit.check(which == SolutionIndex::kFirst ? "ellipticity[C1]" : "ellipticity[C2]", [&] {
          Sides s{connection_coefficient(spec, q * x), connection_coefficient(spec, x)};
          s.rel = std::abs(s.lhs.value - s.rhs.value) / (std::abs(s.rhs.value) + 1.0);
          return s;
        });
      }
      return;
    }
    case Identity::kQdeResidual: {
      const Complex x = scalar(t, "x");
      const std::string equation = text(t, "equation");
      const std::string function = text(t, "function");
      std::function<TruncatedValue(Complex)> u;
      QDifferenceEquation eq;
      if (function == "zero") u = [](Complex) { return exact(0.0); };
      if (equation == "psi1") {
        const Psi1Params p = psi1_params(t, ctx);
        eq = psi1_equation(p, ctx);
        if (function == "v1" || function == "v2") {
          const SolutionIndex which = function == "v1" ? SolutionIndex::kFirst : SolutionIndex::kSecond;
          u = [=](Complex y) { return v_solution(p, ctx, which, y); };
        } else if (function == "resum" || function == "rhs") {
          const SpiralSpec spiral(scalar(t, "lambda"), ctx);
          if (function == "resum") {
            u = [=](Complex y) { return resum_2psi1(p, spiral, y); };
          } else {
            u = [=](Complex y) { return main_theorem_rhs(p, spiral, y); };
          }
        }
      } else if (equation == "heine") {
        const Complex a = scalar(t, "a"), b = scalar(t, "b"), c = scalar(t, "c");
        eq = heine_equation(a, b, c, ctx);
        if (function == "phi") {
          u = [=](Complex y) { return phi_series(SeriesSpec::phi({a, b}, {c}), ctx, y); };
        } else if (function == "watson") {
          u = [=](Complex y) { return watson_rhs(a, b, c, ctx, y); };
        }
      } else {
        config_error("unknown equation '" + equation + "' (expected psi1 or heine)");
      }
      if (!u) config_error("unknown function '" + function + "' for equation " + equation);
      emit.check("qde_residual[" + equation + ":" + function + "]",
                 [&] { return residual_sides(eq, u, x); });
      return;
    }
    case Identity::kRoundtrip: {
      const Complex x = scalar(t, "x");
      const SpiralSpec spiral(scalar(t, "lambda"), ctx);
      const std::string function = text(t, "function");
      EntireFunction f;
      if (function == "one") {
        f = {{[](long n) -> Complex { return n == 0 ? 1.0 : 0.0; }, "1"},
             [](Complex) -> Complex { return 1.0; }};
      } else if (function == "cube") {
        f = {{[](long n) -> Complex { return n == 3 ? 1.0 : 0.0; }, "x^3"},
             [](Complex y) { return y * y * y; }};
      } else if (function == "one_plus_x") {
        f = {{[](long n) -> Complex { return n == 0 || n == 1 ? 1.0 : 0.0; }, "1+x"},
             [](Complex y) { return 1.0 + y; }};
      } else if (function == "phi01") {
        const Complex b = scalar(t, "b");
        f = {{[=](long n) -> Complex {
                if (n < 0) return 0.0;
                return ipow(q, n * (n - 1)) / (qpochhammer(b, ctx, n) * qpochhammer(q, ctx, n));
              },
              "0phi1(-;b;q,x)"},
             [=](Complex y) { return phi_series(SeriesSpec::phi({}, {b}), ctx, y).value; }};
      } else {
        config_error("unknown roundtrip function '" + function + "'");
      }
      emit.check("roundtrip[" + function + "]", [&] {
        const BilateralCoefficients borel = q_borel_plus(f.coefficients, ctx);
        bool inner = true;
        TruncatedValue lhs = q_laplace_plus(
            [&](Complex xi) {
              const TruncatedValue v = power_series(borel, ctx, xi);
              inner = inner && v.converged;
              return v.value;
            },
            spiral, x);
        lhs.converged = lhs.converged && inner;
        return Sides{lhs, exact(f.evaluate(x))};
      });
      return;
    }
  }
}

// ---- random points ----------------------------------------------------------

class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  // Log-uniform radius and uniform angle.
  Complex draw(double r_min, double r_max) {
    const double u = uniform();
    const double v = uniform();
    const double r = r_min * std::pow(r_max / r_min, u);
    return std::polar(r, 2.0 * std::numbers::pi * v - std::numbers::pi);
  }

 private:
  // 53 random bits; independent of the standard library's distributions.
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }

  std::mt19937_64 rng_;
};

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (!(config.tolerance > 0.0)) config_error("tolerance must be positive");
  if (config.precision_bits != QContext::kDoubleBits && config.precision_bits != QContext::kQuadBits) {
    config_error("precision must be 53 or 113 bits");
  }
  if (config.random.count < 0 || !(config.random.r_min > 0.0) ||
      !(config.random.r_max >= config.random.r_min)) {
    config_error("random points need count >= 0 and 0 < r_min <= r_max");
  }

  SweepReport report;
  report.identity = std::string(to_string(config.identity));
  report.seed = config.seed;
  report.tolerance = config.tolerance;
  report.precision_bits = config.precision_bits;

  Emitter emit(config, report.records);
  PointSampler sampler(config.seed);
  const std::string var = point_variable(config.identity);
  for (const ParamTuple& tuple : config.parameter_grid) {
    if (find(tuple, var)) {
      emit.set_inputs(tuple);
      evaluate(config.identity, tuple, config.precision_bits, emit);
      continue;
    }
    if (config.random.count == 0) {
      config_error("grid tuple lacks '" + var + "' and no random points are configured");
    }
    for (int i = 0; i < config.random.count; ++i) {
      ParamTuple point = tuple;
      point.emplace_back(var, ParamValue::of(sampler.draw(config.random.r_min, config.random.r_max)));
      emit.set_inputs(point);
      evaluate(config.identity, point, config.precision_bits, emit);
    }
  }
  report.summary = summarize(report.records);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---- built-in grids -----------------------------------------------------------

namespace {

ParamTuple tuple(std::initializer_list<std::pair<const char*, ParamValue>> items) {
  ParamTuple t;
  for (const auto& [k, v] : items) t.emplace_back(k, v);
  return t;
}

ParamValue num(Complex v) { return ParamValue::of(v); }
ParamValue txt(const char* v) { return ParamValue::of(std::string(v)); }
ParamValue lst(std::vector<Complex> v) { return ParamValue::of(std::move(v)); }
Complex polar(double r, double phi) { return std::polar(r, phi); }

constexpr double kPi = std::numbers::pi;

}  // namespace

SweepConfig default_config(Identity id, std::uint64_t seed) {
  SweepConfig cfg;
  cfg.identity = id;
  cfg.seed = seed;
  auto& grid = cfg.parameter_grid;

  switch (id) {
    case Identity::kTripleProduct:
      cfg.tolerance = 1e-12;
      for (double q : {0.1, 0.3, 0.5}) {
        for (int k = 0; k < 12; ++k) {
          const double r = 0.2 * std::pow(25.0, k / 11.0);
          grid.push_back(tuple({{"q", num(q)}, {"x", num(polar(r, 2 * kPi * k / 12 + 0.25))}}));
        }
      }
      break;
    case Identity::kThetaShift:
      cfg.tolerance = 1e-12;
      for (double q : {0.3, 0.5}) {
        for (Complex x : {polar(0.7, 0.4), polar(1.9, 2.1), polar(0.25, -1.3)}) {
          for (int k = -3; k <= 3; ++k) {
            grid.push_back(tuple({{"q", num(q)}, {"k", num(k)}, {"x", num(x)}}));
          }
        }
      }
      break;
    case Identity::kThetaInversion:
      cfg.tolerance = 1e-12;
      for (double q : {0.2, 0.5, 0.8}) {
        for (Complex x : {polar(0.6, 0.3), polar(1.7, -2.0), polar(3.0, 1.2), Complex(0.9, 0.0)}) {
          grid.push_back(tuple({{"q", num(q)}, {"x", num(x)}}));
        }
      }
      break;
    case Identity::kSignQuasiperiod:
      cfg.tolerance = 1e-12;
      for (double q : {0.3, 0.5}) {
        for (Complex x : {polar(0.6, 0.3), polar(1.7, -2.0), polar(3.0, 1.2), polar(0.3, 2.8)}) {
          grid.push_back(
              tuple({{"q", num(q)}, {"lambda", num(polar(1.1, kPi / 7))}, {"x", num(x)}}));
        }
      }
      break;
    case Identity::kRamanujan: {
      cfg.tolerance = 1e-10;
      struct Row { Complex q, a, b, z; };
      const Row rows[] = {
          {0.3, 0.5, 0.2, 0.65},
          {0.3, 0.5, 0.2, Complex(0.0, 0.5)},
          {0.5, Complex(2.0, 1.0), 0.4, Complex(0.3, 0.2)},
          {0.5, Complex(2.0, 1.0), 0.4, -0.7},
          {0.4, -1.5, Complex(0.0, 0.3), polar(0.5, 1.0)},
          {0.4, -1.5, Complex(0.0, 0.3), polar(0.9, -2.0)},
          {0.6, 3.0, 1.2, 0.55},
          {0.6, 3.0, 1.2, Complex(-0.3, 0.5)},
          {Complex(0.2, 0.1), 0.8, 0.1, 0.4},
          {Complex(0.2, 0.1), 0.8, 0.1, Complex(0.2, -0.6)},
          {0.7, 1.3, 0.5, Complex(0.0, 0.6)},
          {0.7, 1.3, 0.5, -0.8},
      };
      for (const Row& r : rows) {
        grid.push_back(tuple({{"q", num(r.q)}, {"a", num(r.a)}, {"b", num(r.b)}, {"z", num(r.z)}}));
      }
      break;
    }
    case Identity::kWatson: {
      cfg.tolerance = 1e-9;
      struct Row { double q; Complex a, b, c, x; };
      const Row rows[] = {
          {0.5, 5.0, 4.0, 0.3, 0.45},
          {0.5, 5.0, 4.0, 0.3, Complex(0.3, 0.3)},
          {0.5, 5.0, 4.0, 0.3, -0.6},
          {0.3, Complex(3.0, 1.0), 6.0, 0.2, polar(0.5, 1.0)},
          {0.3, Complex(3.0, 1.0), 6.0, 0.2, polar(0.8, -2.0)},
          {0.6, 2.0, -3.0, Complex(0.5, 0.5), Complex(0.0, 0.7)},
      };
      for (const Row& r : rows) {
        grid.push_back(tuple({{"q", num(r.q)}, {"a", num(r.a)}, {"b", num(r.b)}, {"c", num(r.c)},
                              {"x", num(r.x)}}));
      }
      cfg.check_tolerances = {{"heine_lhs", 1e-9}, {"heine_rhs", 1e-9}};
      break;
    }
    case Identity::kSlater: {
      cfg.tolerance = 1e-9;
      const std::vector<Complex> a3{2.0, Complex(1.5, 0.5), 3.0};
      const std::vector<Complex> b3{0.9, 0.5, 0.7};
      const std::vector<Complex> xs[] = {
          {0.6, Complex(0.5, 0.5), Complex(0.0, -0.7), polar(0.8, 2.5), polar(0.55, -1.0)},
          {Complex(0.5, 0.3), -0.4, Complex(0.0, 0.3), polar(0.7, 2.0), polar(0.25, -0.5)},
          {Complex(0.5, 0.3), -0.2, Complex(0.0, 0.6), polar(0.9, 2.5), polar(0.1, 1.0)},
      };
      for (int r = 1; r <= 3; ++r) {
        const std::vector<Complex> a(a3.begin(), a3.begin() + r);
        const std::vector<Complex> b(b3.begin(), b3.begin() + r);
        for (Complex x : xs[r - 1]) {
          grid.push_back(tuple({{"q", num(0.4)}, {"a", lst(a)}, {"b", lst(b)}, {"x", num(x)}}));
        }
      }
      break;
    }
    case Identity::kCorollary: {
      cfg.tolerance = 1e-10;
      const std::vector<Complex> b2{1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
      for (Complex x : {Complex(0.5), Complex(0.3, 0.2), Complex(-0.6), Complex(0.0, 0.8),
                        polar(0.15, 2.2)}) {
        grid.push_back(tuple({{"q", num(0.4)}, {"a1", num(0.7)}, {"a2", num(0.3)}, {"b1", num(0.9)},
                              {"b2", lst(b2)}, {"x", num(x)}}));
      }
      for (Complex x : {polar(0.5, 0.7), Complex(-0.35), polar(0.9, -2.4)}) {
        grid.push_back(tuple({{"q", num(0.4)}, {"a1", num(2.0)}, {"a2", num(Complex(1.5, 0.5))},
                              {"b1", num(0.6)}, {"b2", lst(b2)}, {"x", num(x)}}));
      }
      cfg.check_tolerances = {{"confluent", 100.0}};
      break;
    }
    case Identity::kMainTheorem:
    case Identity::kEllipticity: {
      struct Row { double q; Complex a1, a2, b1, lambda, x; };
      const Row rows[] = {
          {0.4, 0.7, 0.3, 0.9, polar(1.1, kPi / 7), polar(40.0, kPi / 5)},
          {0.4, 0.7, 0.3, 0.9, polar(0.8, 2.0), polar(36.0, -1.0)},
          {0.4, 2.0, 1.5, 0.5, polar(1.1, kPi / 7), polar(2.3, kPi / 5)},
          {0.4, 2.0, 1.5, 0.5, polar(1.3, -0.6), polar(1.5, 2.0)},
          {0.5, Complex(1.2, 0.8), -2.0, Complex(0.0, 0.3), polar(0.9, 1.0), polar(1.0, 0.7)},
          {0.6, 3.0, Complex(0.0, -1.1), 0.8, polar(1.7, 2.6), polar(3.0, -2.5)},
      };
      for (const Row& r : rows) {
        ParamTuple t = tuple({{"q", num(r.q)}, {"a1", num(r.a1)}, {"a2", num(r.a2)},
                              {"b1", num(r.b1)}, {"lambda", num(r.lambda)}});
        if (id == Identity::kMainTheorem) t.emplace_back("x", num(r.x));
        grid.push_back(std::move(t));
      }
      if (id == Identity::kMainTheorem) {
        cfg.tolerance = 1e-8;
        cfg.check_tolerances = {{"spiral_shift", 1e-10}, {"qde_resummed", 1e-9}, {"qde_rhs", 1e-9}};
      } else {
        cfg.tolerance = 1e-10;
        cfg.random = {4, 0.3, 5.0};
      }
      break;
    }
    case Identity::kQdeResidual: {
      cfg.tolerance = 1e-9;
      const auto psi1 = [&](double q, Complex a1, Complex a2, Complex b1, Complex x, const char* fn) {
        grid.push_back(tuple({{"equation", txt("psi1")}, {"function", txt(fn)}, {"q", num(q)},
                              {"a1", num(a1)}, {"a2", num(a2)}, {"b1", num(b1)},
                              {"lambda", num(polar(1.1, kPi / 7))}, {"x", num(x)}}));
      };
      for (const char* fn : {"v1", "v2", "resum", "rhs"}) {
        psi1(0.4, 0.7, 0.3, 0.9, polar(40.0, kPi / 5), fn);
        psi1(0.4, 2.0, 1.5, 0.5, polar(2.3, kPi / 5), fn);
      }
      psi1(0.4, 2.0, 1.5, 0.5, polar(2.3, kPi / 5), "zero");
      for (const char* fn : {"phi", "watson"}) {
        for (Complex x : {Complex(0.45), Complex(0.3, 0.3)}) {
          grid.push_back(tuple({{"equation", txt("heine")}, {"function", txt(fn)}, {"q", num(0.5)},
                                {"a", num(5.0)}, {"b", num(4.0)}, {"c", num(0.3)}, {"x", num(x)}}));
        }
      }
      break;
    }
    case Identity::kRoundtrip:
      cfg.tolerance = 1e-10;
      cfg.random = {5, 0.3, 3.0};
      for (const char* fn : {"one", "cube", "one_plus_x", "phi01"}) {
        ParamTuple t = tuple({{"function", txt(fn)}, {"q", num(0.5)},
                              {"lambda", num(polar(1.1, kPi / 7))}});
        if (std::string_view(fn) == "phi01") t.emplace_back("b", num(0.3));
        grid.push_back(std::move(t));
      }
      break;
  }
  return cfg;
}

}  // namespace qseries
