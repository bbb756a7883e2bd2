#include "qseries/resummation.hpp"

#include <cmath>

#include "detail/resummation_kernels.hpp"
#include "qseries/connection.hpp"
#include "qseries/qcore.hpp"

namespace qseries {

using detail::Cx;
using detail::dispatch;
using detail::Env;
using detail::lift;
using detail::Psi1;
using detail::to_public;

namespace {

Complex q_triangular_power(Complex q, long n) {
  return detail::ipow<double>(q, n * (n - 1) / 2);
}

}  // namespace

BilateralCoefficients q_borel_plus(const BilateralCoefficients& f, const QContext& ctx) {
  const Complex q = ctx.q();
  auto coeff = f.coeff;
  return {[coeff, q](long n) { return coeff(n) * q_triangular_power(q, n); },
          "B+[" + f.description + "]"};
}

BilateralCoefficients psi1_coefficients(const Psi1Params& params, const QContext& ctx) {
  return {[params, ctx](long n) {
            const Complex num = qpochhammer(params.a1(), ctx, n) * qpochhammer(params.a2(), ctx, n);
            const Complex den = qpochhammer(params.b1(), ctx, n);
            const Complex sign = (n % 2 == 0) ? 1.0 : -1.0;
            return num / den / (sign * q_triangular_power(ctx.q(), n));
          },
          "2psi1(a1,a2;b1;q,x)"};
}

BilateralCoefficients psi2_confluent_coefficients(const Psi1Params& params, const QContext& ctx) {
  return {[params, ctx](long n) {
            return qpochhammer(params.a1(), ctx, n) * qpochhammer(params.a2(), ctx, n) /
                   qpochhammer(params.b1(), ctx, n);
          },
          "2psi2(a1,a2;b1,0;q,x)"};
}

TruncatedValue q_laplace_plus(const SpiralFunction& psi, const SpiralSpec& spiral, Complex x) {
  const Env<double> env(spiral.ctx());
  auto integrand = [&](const Complex& xi, const Complex& log_w) {
    detail::Trunc<double> t;
    t.value = psi(xi) * std::exp(log_w);
    return t;
  };
  return to_public(detail::laplace_sum<double>(spiral.lambda(), x, spiral.max_terms_per_side(), env,
                                               integrand));
}

TruncatedValue borel_image_2psi2(const Psi1Params& params, const QContext& ctx, Complex xi,
                                 BorelBranch branch) {
  if (branch == BorelBranch::kAuto) {
    branch = std::abs(xi) < 1.0 ? BorelBranch::kDirect : BorelBranch::kContinuation;
  }
  if (branch == BorelBranch::kDirect) {
    return psi_series(SeriesSpec::psi({params.a1(), params.a2()}, {params.b1(), 0.0}), ctx, -xi);
  }
  if (on_q_lattice(-xi, ctx, -(1L << 20), 1L << 20)) {
    throw Error(ErrorKind::kThetaPole, "xi lies in -q^Z: theta(xi/q) vanishes");
  }
  return corollary_2psi2_continuation(params, ctx, -xi);
}

TruncatedValue resum_2psi1(const Psi1Params& params, const SpiralSpec& spiral, Complex x) {
  const QContext& ctx = spiral.ctx();
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::resum<R>(Psi1<R>(params), lift<R>(spiral.lambda()), lift<R>(x),
                                      spiral.max_terms_per_side(), Env<R>(ctx)));
  });
}

TruncatedValue power_series(const BilateralCoefficients& c, const QContext& ctx, Complex xi) {
  detail::SideSum<double> side(ctx.eps());
  Complex power = 1.0;
  for (long n = 0; n < ctx.max_terms(); ++n) {
    if (side.add(c.coeff(n) * power)) break;
    power *= xi;
  }
  if (!side.done()) {
    throw Error(ErrorKind::kMaxTermsExceeded, "power series did not settle within max_terms");
  }
  TruncatedValue out;
  out.value = side.sum();
  out.terms_used_pos = side.count();
  out.last_term_mag = side.last();
  out.converged = side.converged();
  if (!out.converged) out.note = "power series overflowed";
  return out;
}

double roundtrip_check(const EntireFunction& f, const SpiralSpec& spiral, Complex x) {
  const QContext& ctx = spiral.ctx();
  const BilateralCoefficients borel = q_borel_plus(f.coefficients, ctx);
  const TruncatedValue lb = q_laplace_plus(
      [&](Complex xi) {
        const TruncatedValue v = power_series(borel, ctx, xi);
        return v.value;
      },
      spiral, x);
  if (!lb.converged) {
    throw Error(ErrorKind::kMaxTermsExceeded, "Laplace sum did not converge: " + lb.note);
  }
  const Complex fx = f.evaluate(x);
  return std::abs(lb.value - fx) / std::max(std::abs(fx), 1.0);
}

}  // namespace qseries
