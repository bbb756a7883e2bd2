#include "qseries/qcore.hpp"

#include "detail/qcore_kernels.hpp"

namespace qseries {

using detail::dispatch;
using detail::Env;
using detail::lift;
using detail::lift_all;
using detail::to_public;

Complex qpochhammer(Complex a, const QContext& ctx, long n) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return detail::lower(detail::qpoch_finite<R>(lift<R>(a), n, Env<R>(ctx)));
  });
}

TruncatedValue qpochhammer_inf(Complex a, const QContext& ctx) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::qpoch_inf<R>(lift<R>(a), Env<R>(ctx)));
  });
}

TruncatedValue qpochhammer_multi(std::span<const Complex> as, const QContext& ctx) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    std::vector<detail::Cx<R>> v;
    for (const auto& a : as) v.push_back(lift<R>(a));
    return to_public(detail::qpoch_multi<R>(v, Env<R>(ctx)));
  });
}

TruncatedValue qpochhammer_multi(std::initializer_list<Complex> as, const QContext& ctx) {
  return qpochhammer_multi(std::span<const Complex>(as.begin(), as.size()), ctx);
}

TruncatedValue theta(Complex x, const QContext& ctx) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::theta_sum<R>(lift<R>(x), Env<R>(ctx)));
  });
}

TruncatedValue phi_series(const SeriesSpec& spec, const QContext& ctx, Complex x) {
  if (spec.kind != SeriesKind::kUnilateralPhi) {
    throw Error(ErrorKind::kInvalidParameter, "phi_series needs a unilateral series spec");
  }
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::phi_sum<R>(lift_all<R>(spec.numerator), lift_all<R>(spec.denominator),
                                        lift<R>(x), Env<R>(ctx)));
  });
}

TruncatedValue psi_series(const SeriesSpec& spec, const QContext& ctx, Complex x) {
  if (spec.kind != SeriesKind::kBilateralPsi) {
    throw Error(ErrorKind::kInvalidParameter, "psi_series needs a bilateral series spec");
  }
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return to_public(detail::psi_sum<R>(lift_all<R>(spec.numerator), lift_all<R>(spec.denominator),
                                        lift<R>(x), Env<R>(ctx)));
  });
}

bool on_q_lattice(Complex y, const QContext& ctx, long k_min, long k_max) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return detail::on_lattice<R>(lift<R>(y), Env<R>(ctx), k_min, k_max);
  });
}

double resonance_tolerance(const QContext& ctx) {
  return dispatch(ctx, [&](auto tag) {
    using R = decltype(tag);
    return static_cast<double>(Env<R>(ctx).tol);
  });
}

}  // namespace qseries
