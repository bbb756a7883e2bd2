#include "qseries/connection.hpp"

#include "detail/connection_kernels.hpp"

namespace qseries {

using detail::Cx;
using detail::dispatch;
using detail::Env;
using detail::lift;
using detail::lift_all;
using detail::Psi1;
using detail::to_public;

TruncatedValue ramanujan_product(Complex a, Complex b, const QContext& ctx, Complex z) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::ramanujan<R>(lift<R>(a), lift<R>(b), lift<R>(z), Env<R>(ctx)));
  });
}

TruncatedValue watson_y_infinity(Complex a, Complex b, Complex c, const QContext& ctx, Complex x) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(
        detail::y_infinity<R>(lift<R>(a), lift<R>(b), lift<R>(c), lift<R>(x), Env<R>(ctx)));
  });
}

TruncatedValue watson_rhs(Complex a, Complex b, Complex c, const QContext& ctx, Complex x) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(
        detail::watson<R>(lift<R>(a), lift<R>(b), lift<R>(c), lift<R>(x), Env<R>(ctx)));
  });
}

TruncatedValue slater_prefactor(const SlaterParams& params, const QContext& ctx, Complex x) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::slater_pref<R>(lift_all<R>(params.a()), lift_all<R>(params.b()),
                                            lift<R>(x), Env<R>(ctx)));
  });
}

TruncatedValue slater_rhs(const SlaterParams& params, const QContext& ctx, Complex x) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::slater<R>(lift_all<R>(params.a()), lift_all<R>(params.b()),
                                       lift<R>(x), Env<R>(ctx)));
  });
}

TruncatedValue corollary_2psi2_continuation(const Psi1Params& params, const QContext& ctx,
                                            Complex x) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::corollary<R>(Psi1<R>(params), lift<R>(x), Env<R>(ctx)));
  });
}

TruncatedValue corollary_2psi2_rhs(const Psi1Params& params, const QContext& ctx, Complex x) {
  const double ax = std::abs(x);
  if (!(ax > 0.0 && ax < 1.0)) {
    throw Error(ErrorKind::kOutsideConvergenceDomain, "confluent 2psi2 formula needs 0 < |x| < 1");
  }
  return corollary_2psi2_continuation(params, ctx, x);
}

TruncatedValue v_solution(const Psi1Params& params, const QContext& ctx, SolutionIndex which,
                          Complex x) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(
        detail::v_sol<R>(Psi1<R>(params), static_cast<int>(which), lift<R>(x), Env<R>(ctx)));
  });
}

void validate(const ConnectionCoefficientSpec& spec) {
  const QContext& ctx = spec.spiral.ctx();
  dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    detail::validate_coefficients<R>(Psi1<R>(spec.params), Env<R>(ctx));
    return 0;
  });
}

TruncatedValue connection_coefficient(const ConnectionCoefficientSpec& spec, Complex x) {
  const QContext& ctx = spec.spiral.ctx();
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::coefficient<R>(Psi1<R>(spec.params), static_cast<int>(spec.which),
                                            lift<R>(spec.spiral.lambda()), lift<R>(x),
                                            spec.form == CoefficientForm::kComplete,
                                            Env<R>(ctx)));
  });
}

MainTheoremTerms main_theorem_terms(const Psi1Params& params, const SpiralSpec& spiral, Complex x,
                                    CoefficientForm form) {
  const QContext& ctx = spiral.ctx();
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    const Env<R> env(ctx);
    const Psi1<R> p(params);
    const Cx<R> lambda = lift<R>(spiral.lambda());
    const Cx<R> xx = lift<R>(x);
    const bool complete = form == CoefficientForm::kComplete;
    MainTheoremTerms out;
    detail::Trunc<R> terms[2];
    for (int i = 1; i <= 2; ++i) {
      const auto c = detail::coefficient<R>(p, i, lambda, xx, complete, env);
      const auto v = detail::v_sol<R>(p, i, xx, env);
      terms[i - 1] = detail::combine<R>(c.value * v.value, {&c, &v});
    }
    const auto total =
        detail::combine<R>(terms[0].value + terms[1].value, {&terms[0], &terms[1]});
    out.first = to_public(terms[0]);
    out.second = to_public(terms[1]);
    out.total = to_public(total);
    return out;
  });
}

TruncatedValue main_theorem_rhs(const Psi1Params& params, const SpiralSpec& spiral, Complex x,
                                CoefficientForm form) {
  return main_theorem_terms(params, spiral, x, form).total;
}

}  // namespace qseries
