#pragma once

#include <sstream>

#include "detail/connection_kernels.hpp"

namespace qseries::detail {

/// Below this |xi| the Borel image is summed as a bilateral series; above it
/// the two-1phi1 continuation is used.
constexpr double kDirectBranchRadius = 0.5;

/// Jackson sum sum_n g(lambda q^n, log w_n) with w_n = 1/theta(lambda q^n / x).
///
/// The integrand receives log w_n rather than w_n: for n far from 0 the
/// weight leaves the exponent range of double while the product with the
/// Borel image stays moderate.
template <class R, class Integrand>
Trunc<R> laplace_sum(const Cx<R>& lambda, const Cx<R>& x, long max_side, const Env<R>& env,
                     Integrand&& g) {
  const Cx<R> ratio = lambda / x;
  if (theta_vanishes<R>(ratio, env)) {
    fail<R>(ErrorKind::kSpiralCollision, "x lies on the spiral -[lambda; q]");
  }
  const Trunc<R> log_theta_base = log_theta<R>(ratio, env);
  const Cx<R> log_q = clog<R>(env.q);
  const Cx<R> log_ratio = clog<R>(ratio);

  bool inner_ok = true;
  std::string inner_note;
  auto term_at = [&](long n) {
    const Cx<R> xi = lambda * ipow<R>(env.q, n);
    const R tri = R(n) * R(n - 1) / R(2);
    const Cx<R> log_w = tri * log_q + R(n) * log_ratio - log_theta_base.value;
    Trunc<R> t = g(xi, log_w);
    if (!t.converged) {
      inner_ok = false;
      if (inner_note.empty()) inner_note = t.note.empty() ? "inner series not converged" : t.note;
    }
    return t.value;
  };

  SideSum<R> pos(env.eps);
  for (long n = 0; n < max_side; ++n) {
    if (pos.add(term_at(n))) break;
  }
  SideSum<R> neg(env.eps);
  for (long n = -1; n > -max_side; --n) {
    if (neg.add(term_at(n))) break;
  }

  Trunc<R> out;
  out.value = pos.sum() + neg.sum();
  out.pos = pos.count();
  out.neg = neg.count();
  out.last = std::max(pos.last(), neg.last());
  out.converged = pos.converged() && neg.converged() && inner_ok && log_theta_base.converged;
  std::ostringstream note;
  auto describe = [&](const SideSum<R>& side, const char* name) {
    if (side.converged()) return;
    if (note.tellp() > 0) note << "; ";
    note << name << (side.overflow() ? " overflowed" : " did not decay") << " within "
         << side.count() << " terms";
  };
  describe(pos, "positive side (xi -> 0)");
  describe(neg, "negative side (xi -> infinity)");
  if (!inner_ok) {
    if (note.tellp() > 0) note << "; ";
    note << inner_note;
  }
  out.note = note.str();
  return out;
}

/// w * 2psi2(a1, a2; b1, 0; q, -xi) with log w given, summed in log form
/// from n = 0 outwards in both directions.
template <class R>
Trunc<R> borel_direct_weighted(const Psi1<R>& p, const Cx<R>& xi, const Cx<R>& log_w,
                               const Env<R>& env) {
  const Cx<R> one(R(1), R(0));
  const Cx<R> log_y = clog<R>(-xi);
  SideSum<R> pos(env.eps);
  SideSum<R> neg(env.eps);

  Cx<R> ell = log_w;
  Cx<R> qk = one;
  for (long k = 0; k < env.max_terms; ++k) {
    if (pos.add(cexp<R>(ell), ell.real())) break;
    const Cx<R> f1 = one - p.a1 * qk;
    const Cx<R> f2 = one - p.a2 * qk;
    if (mag<R>(f1) < env.tol || mag<R>(f2) < env.tol) {
      pos.terminate();
      break;
    }
    ell += clog<R>(f1) + clog<R>(f2) - clog<R>(one - p.b1 * qk) + log_y;
    qk *= env.q;
  }

  ell = log_w;
  const Cx<R> qinv = one / env.q;
  Cx<R> qm = qinv;
  for (long k = -1; k > -env.max_terms; --k) {
    const Cx<R> fb = one - p.b1 * qm;
    if (mag<R>(fb) < env.tol) {
      neg.terminate();
      break;
    }
    ell += clog<R>(fb) - clog<R>(one - p.a1 * qm) - clog<R>(one - p.a2 * qm) - log_y;
    qm *= qinv;
    if (neg.add(cexp<R>(ell), ell.real())) break;
  }

  Trunc<R> out;
  out.value = pos.sum() + neg.sum();
  out.pos = pos.count();
  out.neg = neg.count();
  out.last = std::max(pos.last(), neg.last());
  out.converged = pos.converged() && neg.converged();
  if (!out.converged) out.note = "bilateral Borel image did not settle";
  return out;
}

/// w * (continuation of the Borel image) at xi with log w given.
template <class R>
Trunc<R> borel_continuation_weighted(const Psi1<R>& p, const Trunc<R> (&prefactor)[2],
                                     const Cx<R>& xi, const Cx<R>& log_w, const Env<R>& env) {
  const Cx<R> q = env.q;
  const Trunc<R> log_den = log_theta<R>(xi / q, env);
  std::vector<Trunc<R>> parts;
  Cx<R> total(R(0), R(0));
  for (int i = 1; i <= 2; ++i) {
    const Cx<R> ai = i == 1 ? p.a1 : p.a2;
    if (theta_vanishes<R>(ai * xi / q, env)) continue;
    const Trunc<R> log_num = log_theta<R>(ai * xi / q, env);
    const Trunc<R> series = corollary_series<R>(p, i, -xi, env);
    const Cx<R> term =
        prefactor[i - 1].value * cexp<R>(log_num.value - log_den.value + log_w) * series.value;
    Trunc<R> weight;
    weight.value = term;
    weight.last = (log_num.last + log_den.last) * std::max(mag<R>(term), R(1));
    weight.converged = log_num.converged && log_den.converged;
    parts.push_back(combine<R>(term, {&prefactor[i - 1], &weight, &series}));
    total += term;
  }
  return combine<R>(total, parts);
}

template <class R>
Trunc<R> resum(const Psi1<R>& p, const Cx<R>& lambda, const Cx<R>& x, long max_side,
               const Env<R>& env) {
  if (theta_vanishes<R>(lambda / env.q, env)) {
    fail<R>(ErrorKind::kThetaPole, "lambda lies in -q^Z: the Borel image has poles on the spiral");
  }
  const Trunc<R> prefactor[2] = {corollary_prefactor<R>(p, 1, env),
                                 corollary_prefactor<R>(p, 2, env)};
  const R radius(kDirectBranchRadius);
  return laplace_sum<R>(lambda, x, max_side, env, [&](const Cx<R>& xi, const Cx<R>& log_w) {
    if (mag<R>(xi) < radius) return borel_direct_weighted<R>(p, xi, log_w, env);
    return borel_continuation_weighted<R>(p, prefactor, xi, log_w, env);
  });
}

}  // namespace qseries::detail
