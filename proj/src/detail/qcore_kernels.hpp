#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "detail/scalar.hpp"

namespace qseries::detail {

template <class R>
[[noreturn]] void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

/// Is y = q^k for some k in [k_min, k_max] (relative distance below tol)?
template <class R>
bool on_lattice(const Cx<R>& y, const Env<R>& env, long k_min, long k_max) {
  if (is_zero<R>(y)) return false;
  const double ly = std::log(static_cast<double>(mag<R>(y)));
  const double lq = std::log(static_cast<double>(env.q_abs));
  const long k0 = std::lround(ly / lq);
  for (long k = k0 - 1; k <= k0 + 1; ++k) {
    if (k < k_min || k > k_max) continue;
    const Cx<R> ratio = y * ipow<R>(env.q, -k);
    if (mag<R>(Cx<R>(R(1), R(0)) - ratio) < env.tol * R(1 + std::labs(k))) return true;
  }
  return false;
}

constexpr long kLatticeSpan = 1L << 20;

/// (c; q)_inf vanishes exactly when c lies in q^{Z<=0}.
template <class R>
bool pochhammer_inf_vanishes(const Cx<R>& c, const Env<R>& env) {
  return on_lattice<R>(c, env, -kLatticeSpan, 0);
}

/// theta(y) vanishes exactly on -q^Z.
template <class R>
bool theta_vanishes(const Cx<R>& y, const Env<R>& env) {
  return on_lattice<R>(-y, env, -kLatticeSpan, kLatticeSpan);
}

template <class R>
Cx<R> qpoch_finite(const Cx<R>& a, long n, const Env<R>& env) {
  const Cx<R> one(R(1), R(0));
  Cx<R> p = one;
  if (n >= 0) {
    Cx<R> t = a;
    for (long k = 0; k < n; ++k) {
      p *= one - t;
      t *= env.q;
    }
    return p;
  }
  const Cx<R> qinv = one / env.q;
  Cx<R> t = a * qinv;
  for (long k = 1; k <= -n; ++k) {
    const Cx<R> f = one - t;
    if (mag<R>(f) < env.tol) {
      std::ostringstream os;
      os << "factor 1 - a q^-" << k << " vanishes (resonant parameter)";
      fail<R>(ErrorKind::kDivisionByVanishingFactor, os.str());
    }
    p *= f;
    t *= qinv;
  }
  return one / p;
}

template <class R>
Trunc<R> qpoch_inf(const Cx<R>& a, const Env<R>& env) {
  Trunc<R> out;
  const Cx<R> one(R(1), R(0));
  out.value = one;
  if (is_zero<R>(a)) return out;
  const R slack = R(1) / (R(1) - env.q_abs);
  Cx<R> t = a;
  for (long k = 0; k < env.max_terms; ++k) {
    const Cx<R> f = one - t;
    out.value *= f;
    out.pos = k + 1;
    if (is_zero<R>(f)) {
      out.value = Cx<R>(R(0), R(0));
      out.last = R(0);
      return out;
    }
    t *= env.q;
    const R bound = mag<R>(t) * slack;
    out.last = bound;
    if (bound < env.eps) return out;
  }
  fail<R>(ErrorKind::kMaxTermsExceeded, "(a;q)_inf tail bound not reached within max_terms");
}

template <class R>
Trunc<R> qpoch_multi(const std::vector<Cx<R>>& as, const Env<R>& env) {
  std::vector<Trunc<R>> parts;
  parts.reserve(as.size());
  Cx<R> value(R(1), R(0));
  for (const auto& a : as) {
    parts.push_back(qpoch_inf<R>(a, env));
    value *= parts.back().value;
  }
  return combine<R>(value, parts);
}

/// Ratio of two Pochhammer products; a vanishing denominator factor is a
/// pole.
template <class R>
Trunc<R> qpoch_ratio(const std::vector<Cx<R>>& num, const std::vector<Cx<R>>& den,
                     const Env<R>& env, const char* what) {
  for (const auto& d : den) {
    if (pochhammer_inf_vanishes<R>(d, env)) {
      fail<R>(ErrorKind::kPoleInProduct, std::string(what) + ": denominator (c;q)_inf vanishes");
    }
  }
  const Trunc<R> n = qpoch_multi<R>(num, env);
  const Trunc<R> d = qpoch_multi<R>(den, env);
  return combine<R>(n.value / d.value, {&n, &d});
}

/// Bilateral theta sum, each direction truncated on its own.
template <class R>
Trunc<R> theta_sum(const Cx<R>& x, const Env<R>& env) {
  if (is_zero<R>(x)) fail<R>(ErrorKind::kZeroArgument, "theta(0) is undefined");
  const Cx<R> one(R(1), R(0));
  SideSum<R> pos(env.eps);
  SideSum<R> neg(env.eps);

  Cx<R> t = one;
  Cx<R> qn = one;  // q^n
  for (long n = 0; n < env.max_terms && !pos.add(t); ++n) {
    t *= qn * x;
    qn *= env.q;
  }
  // t_{n-1} = t_n / (q^{n-1} x)
  const Cx<R> qinv = one / env.q;
  t = one;
  Cx<R> qm = qinv;  // q^{n-1} for n = 0
  for (long n = 0; n < env.max_terms; ++n) {
    t /= qm * x;
    qm *= qinv;
    if (neg.add(t)) break;
  }
  if (!pos.done() || !neg.done()) {
    fail<R>(ErrorKind::kMaxTermsExceeded, "theta sum did not settle within max_terms");
  }
  Trunc<R> out;
  out.value = pos.sum() + neg.sum();
  out.pos = pos.count();
  out.neg = neg.count();
  out.last = std::max(pos.last(), neg.last());
  out.converged = pos.converged() && neg.converged();
  if (!out.converged) out.note = "theta sum overflowed";
  return out;
}

/// log theta(x) via x = q^k x0 with |q| < |x0| <= 1 and
///   theta(q^k x0) = q^{-k(k-1)/2} x0^{-k} theta(x0).
/// The caller guarantees theta(x) != 0.
template <class R>
Trunc<R> log_theta(const Cx<R>& x, const Env<R>& env) {
  if (is_zero<R>(x)) fail<R>(ErrorKind::kZeroArgument, "theta(0) is undefined");
  const double lx = std::log(static_cast<double>(mag<R>(x)));
  const double lq = std::log(static_cast<double>(env.q_abs));
  const long k = static_cast<long>(std::floor(lx / lq));
  Cx<R> x0;
  if (std::labs(k) < 512) {
    x0 = x * ipow<R>(env.q, -k);
  } else {
    x0 = cexp<R>(clog<R>(x) - R(k) * clog<R>(env.q));
  }
  Trunc<R> base = theta_sum<R>(x0, env);
  const R kk = R(k);
  const Cx<R> lg = clog<R>(base.value) - (kk * (kk - R(1)) / R(2)) * clog<R>(env.q) -
                   kk * clog<R>(x0);
  // relative error of theta(x0) carries over to the absolute error of the log
  base.last = base.last / std::max(mag<R>(base.value), R(1));
  base.value = lg;
  return base;
}

/// theta(num) / theta(den), computed through log_theta so that both
/// arguments may be far outside the unit annulus.
template <class R>
Trunc<R> theta_ratio(const Cx<R>& num, const Cx<R>& den, const Env<R>& env) {
  if (theta_vanishes<R>(den, env)) {
    fail<R>(ErrorKind::kThetaZero, "theta in a denominator vanishes");
  }
  if (theta_vanishes<R>(num, env)) {
    Trunc<R> zero;
    zero.value = Cx<R>(R(0), R(0));
    return zero;
  }
  const Trunc<R> ln = log_theta<R>(num, env);
  const Trunc<R> ld = log_theta<R>(den, env);
  Trunc<R> out;
  out.value = cexp<R>(ln.value - ld.value);
  out.pos = ln.pos + ld.pos;
  out.neg = ln.neg + ld.neg;
  out.converged = ln.converged && ld.converged;
  out.last = (ln.last + ld.last) * std::max(mag<R>(out.value), R(1));
  return out;
}

/// Unilateral r phi s at x.
template <class R>
Trunc<R> phi_sum(const std::vector<Cx<R>>& a, const std::vector<Cx<R>>& b, const Cx<R>& x,
                 const Env<R>& env) {
  const long r = static_cast<long>(a.size());
  const long s = static_cast<long>(b.size());
  if (r - s > 1) {
    fail<R>(ErrorKind::kDivergentSeries, "r - s > 1: radius of convergence is 0");
  }
  if (r - s == 1 && !(mag<R>(x) < R(1))) {
    fail<R>(ErrorKind::kOutsideConvergenceDomain, "r - s = 1 requires |x| < 1");
  }
  for (const auto& bj : b) {
    if (on_lattice<R>(bj, env, -kLatticeSpan, 0)) {
      fail<R>(ErrorKind::kDivisionByVanishingFactor, "denominator parameter lies in q^{-N}");
    }
  }
  const long power = 1 + s - r;
  const Cx<R> one(R(1), R(0));
  SideSum<R> side(env.eps);
  Cx<R> t = one;
  Cx<R> qn = one;
  for (long n = 0; n < env.max_terms; ++n) {
    if (side.add(t)) break;
    Cx<R> f = x / (one - qn * env.q);
    for (const auto& ai : a) f *= one - ai * qn;
    for (const auto& bj : b) f /= one - bj * qn;
    if (power != 0) f *= ipow<R>(-qn, power);
    t *= f;
    qn *= env.q;
  }
  if (!side.done()) {
    fail<R>(ErrorKind::kMaxTermsExceeded, "phi series did not settle within max_terms");
  }
  Trunc<R> out;
  out.value = side.sum();
  out.pos = side.count();
  out.last = side.last();
  out.converged = side.converged();
  if (!out.converged) out.note = "phi series overflowed";
  return out;
}

template <class R>
R product_modulus(const std::vector<Cx<R>>& v) {
  R p(1);
  for (const auto& z : v) p *= mag<R>(z);
  return p;
}

/// Bilateral r psi s at x.
template <class R>
Trunc<R> psi_sum(const std::vector<Cx<R>>& a, const std::vector<Cx<R>>& b, const Cx<R>& x,
                 const Env<R>& env) {
  const long r = static_cast<long>(a.size());
  const long s = static_cast<long>(b.size());
  if (s < r) {
    fail<R>(ErrorKind::kDivergentAtOrigin,
            "r psi s with s < r diverges around the origin; use the q-Borel-Laplace resummation");
  }
  for (const auto& ai : a) {
    if (is_zero<R>(ai)) fail<R>(ErrorKind::kInvalidParameter, "bilateral numerator parameter is 0");
    if (on_lattice<R>(ai, env, 1, kLatticeSpan)) {
      fail<R>(ErrorKind::kDivisionByVanishingFactor,
              "numerator parameter in q^{Z>=1}: (a;q)_n is infinite for n < 0");
    }
  }
  for (const auto& bj : b) {
    if (on_lattice<R>(bj, env, -kLatticeSpan, 0)) {
      fail<R>(ErrorKind::kDivisionByVanishingFactor, "denominator parameter lies in q^{Z<=0}");
    }
  }
  const R radius = product_modulus<R>(b) / product_modulus<R>(a);
  const R ax = mag<R>(x);
  if (!(ax > radius) || (r == s && !(ax < R(1)))) {
    std::ostringstream os;
    os << "bilateral series needs " << static_cast<double>(radius) << " < |x|"
       << (r == s ? " < 1" : "") << ", got |x| = " << static_cast<double>(ax);
    fail<R>(ErrorKind::kOutsideConvergenceDomain, os.str());
  }
  const long power = s - r;
  const Cx<R> one(R(1), R(0));

  SideSum<R> pos(env.eps);
  Cx<R> t = one;
  Cx<R> qm = one;
  for (long m = 0; m < env.max_terms; ++m) {
    if (pos.add(t)) break;
    Cx<R> f = x;
    for (const auto& ai : a) f *= one - ai * qm;
    for (const auto& bj : b) f /= one - bj * qm;
    if (power != 0) f *= ipow<R>(-qm, power);
    t *= f;
    qm *= env.q;
  }

  // t_m = t_{m+1} * prod(1 - b q^m) / (x prod(1 - a q^m) (-q^m)^{s-r}), m = -1, -2, ...
  SideSum<R> neg(env.eps);
  const Cx<R> qinv = one / env.q;
  t = one;
  qm = qinv;
  for (long m = -1; m > -env.max_terms; --m) {
    Cx<R> f = one;
    for (const auto& bj : b) f *= one - bj * qm;
    Cx<R> g = x;
    for (const auto& ai : a) g *= one - ai * qm;
    if (power != 0) g *= ipow<R>(-qm, power);
    t *= f / g;
    qm *= qinv;
    if (is_zero<R>(t)) {
      neg.add(t);
      neg.terminate();
      break;
    }
    if (neg.add(t)) break;
  }
  if (!pos.done() || !neg.done()) {
    fail<R>(ErrorKind::kMaxTermsExceeded, "psi series did not settle within max_terms");
  }
  Trunc<R> out;
  out.value = pos.sum() + neg.sum();
  out.pos = pos.count();
  out.neg = neg.count();
  out.last = std::max(pos.last(), neg.last());
  out.converged = pos.converged() && neg.converged();
  if (!out.converged) out.note = "psi series overflowed";
  return out;
}

template <class R>
std::vector<Cx<R>> lift_all(const std::vector<Complex>& v) {
  std::vector<Cx<R>> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(lift<R>(z));
  return out;
}

}  // namespace qseries::detail
