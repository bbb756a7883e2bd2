#pragma once

#include <array>
#include <sstream>

#include "detail/qcore_kernels.hpp"
#include "qseries/params.hpp"

namespace qseries::detail {

/// Sign applied to C_2; -1 only in the fault-injected test build.
double second_coefficient_sign();

template <class R>
struct Psi1 {
  Cx<R> a1, a2, b1;

  explicit Psi1(const Psi1Params& p) : a1(lift<R>(p.a1())), a2(lift<R>(p.a2())), b1(lift<R>(p.b1())) {}
  Psi1(Cx<R> x1, Cx<R> x2, Cx<R> y1) : a1(x1), a2(x2), b1(y1) {}

  /// (a_i, a_j) for term i.
  std::pair<Cx<R>, Cx<R>> pair(int i) const { return i == 1 ? std::pair{a1, a2} : std::pair{a2, a1}; }
};

template <class R>
Trunc<R> ramanujan(const Cx<R>& a, const Cx<R>& b, const Cx<R>& z, const Env<R>& env) {
  const R inner = mag<R>(b / a);
  const R az = mag<R>(z);
  if (!(inner < az && az < R(1))) {
    std::ostringstream os;
    os << "1psi1 sum needs |b/a| < |z| < 1, got |b/a| = " << static_cast<double>(inner)
       << ", |z| = " << static_cast<double>(az);
    fail<R>(ErrorKind::kOutsideConvergenceDomain, os.str());
  }
  const Cx<R> q = env.q;
  return qpoch_ratio<R>({q, b / a, a * z, q / (a * z)}, {b, q / a, z, b / (a * z)}, env,
                        "Ramanujan product");
}

/// theta(ax)/theta(x) * 2phi1(a, aq/c; aq/b; q, cq/(abx)).
template <class R>
Trunc<R> y_infinity(const Cx<R>& a, const Cx<R>& b, const Cx<R>& c, const Cx<R>& x,
                    const Env<R>& env) {
  const Cx<R> q = env.q;
  const Cx<R> arg = c * q / (a * b * x);
  if (!(mag<R>(arg) < R(1))) {
    fail<R>(ErrorKind::kOutsideConvergenceDomain, "y_inf needs |cq/(abx)| < 1");
  }
  const Trunc<R> ratio = theta_ratio<R>(a * x, x, env);
  const Trunc<R> series = phi_sum<R>({a, a * q / c}, {a * q / b}, arg, env);
  return combine<R>(ratio.value * series.value, {&ratio, &series});
}

template <class R>
Trunc<R> watson(const Cx<R>& a, const Cx<R>& b, const Cx<R>& c, const Cx<R>& x,
                const Env<R>& env) {
  if (on_lattice<R>(a / b, env, -kLatticeSpan, kLatticeSpan)) {
    fail<R>(ErrorKind::kInvalidParameter, "a/b lies in q^Z: Watson's coefficients are resonant");
  }
  std::vector<Trunc<R>> parts;
  Cx<R> total(R(0), R(0));
  for (int i = 0; i < 2; ++i) {
    const Cx<R>& u = i == 0 ? a : b;
    const Cx<R>& w = i == 0 ? b : a;
    const Trunc<R> pre = qpoch_ratio<R>({w, c / u}, {c, w / u}, env, "Watson coefficient");
    const Trunc<R> t1 = theta_ratio<R>(-u * x, -x, env);
    const Trunc<R> t2 = theta_ratio<R>(x, u * x, env);
    const Trunc<R> y = y_infinity<R>(u, w, c, x, env);
    const Cx<R> term = pre.value * t1.value * t2.value * y.value;
    parts.push_back(combine<R>(term, {&pre, &t1, &t2, &y}));
    total += term;
  }
  return combine<R>(total, parts);
}

template <class R>
Trunc<R> slater_pref(const std::vector<Cx<R>>& a, const std::vector<Cx<R>>& b, const Cx<R>& x,
                     const Env<R>& env) {
  const Cx<R> q = env.q;
  std::vector<Cx<R>> num(b);
  std::vector<Cx<R>> den;
  for (const auto& ai : a) num.push_back(q / ai);
  num.push_back(x);
  num.push_back(q / x);
  for (const auto& ai : a) den.push_back(q * ai);
  for (const auto& ai : a) den.push_back(Cx<R>(R(1), R(0)) / ai);
  return qpoch_ratio<R>(num, den, env, "Slater prefactor");
}

template <class R>
Trunc<R> slater(const std::vector<Cx<R>>& a, const std::vector<Cx<R>>& b, const Cx<R>& x,
                const Env<R>& env) {
  const std::size_t r = a.size();
  const R inner = product_modulus<R>(b) / product_modulus<R>(a);
  const R ax = mag<R>(x);
  if (!(inner < ax && ax < R(1))) {
    std::ostringstream os;
    os << "Slater's formula needs " << static_cast<double>(inner) << " < |x| < 1, got "
       << static_cast<double>(ax);
    fail<R>(ErrorKind::kOutsideConvergenceDomain, os.str());
  }
  const Cx<R> q = env.q;
  Cx<R> prod_b(R(1), R(0));
  Cx<R> prod_a(R(1), R(0));
  for (std::size_t k = 0; k < r; ++k) {
    prod_b *= b[k];
    prod_a *= a[k];
  }
  const Cx<R> z = prod_b / (prod_a * x);

  std::vector<Trunc<R>> parts;
  Cx<R> total(R(0), R(0));
  for (std::size_t i = 0; i < r; ++i) {
    const Cx<R>& ai = a[i];
    std::vector<Cx<R>> num{q};
    std::vector<Cx<R>> den{q * ai, Cx<R>(R(1), R(0)) / ai};
    std::vector<Cx<R>> upper;
    std::vector<Cx<R>> lower;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      num.push_back(q * ai / a[j]);
      den.push_back(ai / a[j]);
      den.push_back(q * a[j] / ai);
      lower.push_back(q * ai / a[j]);
    }
    for (std::size_t k = 0; k < r; ++k) {
      num.push_back(b[k] / ai);
      upper.push_back(q * ai / b[k]);
    }
    num.push_back(ai * x);
    num.push_back(q / (ai * x));
    const Trunc<R> pre = qpoch_ratio<R>(num, den, env, "Slater term");
    const Trunc<R> series = phi_sum<R>(upper, lower, z, env);
    const Cx<R> term = ipow<R>(ai, static_cast<long>(r) - 1) * pre.value * series.value;
    parts.push_back(combine<R>(term, {&pre, &series}));
    total += term;
  }
  return combine<R>(total, parts);
}

/// Pochhammer prefactor of the i-th term of the confluent 2psi2 formula:
///   (q a_i, q a_j, 1/a_j, q a_i/a_j, b1/a_i, q; q)_inf
///     / (b1, q/a_i, q/a_j, q a_i, a_i/a_j, q a_j/a_i; q)_inf.
template <class R>
Trunc<R> corollary_prefactor(const Psi1<R>& p, int i, const Env<R>& env) {
  const auto [ai, aj] = p.pair(i);
  const Cx<R> q = env.q;
  const Cx<R> one(R(1), R(0));
  return qpoch_ratio<R>({q * ai, q * aj, one / aj, q * ai / aj, p.b1 / ai, q},
                        {p.b1, q / ai, q / aj, q * ai, ai / aj, q * aj / ai}, env,
                        "confluent 2psi2 prefactor");
}

/// 1phi1(q a_i/b1; q a_i/a_j; q, q b1/(a_j x)).
template <class R>
Trunc<R> corollary_series(const Psi1<R>& p, int i, const Cx<R>& x, const Env<R>& env) {
  const auto [ai, aj] = p.pair(i);
  const Cx<R> q = env.q;
  return phi_sum<R>({q * ai / p.b1}, {q * ai / aj}, q * p.b1 / (aj * x), env);
}

template <class R>
Trunc<R> corollary(const Psi1<R>& p, const Cx<R>& x, const Env<R>& env) {
  const Cx<R> q = env.q;
  if (theta_vanishes<R>(-x / q, env)) {
    fail<R>(ErrorKind::kThetaZero, "theta(-x/q) vanishes: x lies in q^Z");
  }
  std::vector<Trunc<R>> parts;
  Cx<R> total(R(0), R(0));
  for (int i = 1; i <= 2; ++i) {
    const auto [ai, aj] = p.pair(i);
    const Trunc<R> pre = corollary_prefactor<R>(p, i, env);
    const Trunc<R> th = theta_ratio<R>(-ai * x / q, -x / q, env);
    const Trunc<R> series = corollary_series<R>(p, i, x, env);
    const Cx<R> term = pre.value * th.value * series.value;
    parts.push_back(combine<R>(term, {&pre, &th, &series}));
    total += term;
  }
  return combine<R>(total, parts);
}

template <class R>
Trunc<R> v_sol(const Psi1<R>& p, int i, const Cx<R>& x, const Env<R>& env) {
  const Cx<R> arg = p.b1 / (p.a1 * p.a2 * x);
  if (!(mag<R>(arg) < R(1))) {
    fail<R>(ErrorKind::kOutsideConvergenceDomain, "v_i needs |b1/(a1 a2 x)| < 1");
  }
  if (theta_vanishes<R>(x, env)) fail<R>(ErrorKind::kThetaZero, "theta(x) vanishes");
  const auto [ai, aj] = p.pair(i);
  const Cx<R> q = env.q;
  const Trunc<R> ratio = theta_ratio<R>(ai * x, x, env);
  const Trunc<R> series =
      phi_sum<R>({q * ai / p.b1, Cx<R>(R(0), R(0))}, {q * ai / aj}, arg, env);
  return combine<R>(ratio.value * series.value, {&ratio, &series});
}

template <class R>
void validate_coefficients(const Psi1<R>& p, const Env<R>& env) {
  const Cx<R> q = env.q;
  for (const Cx<R>& c : {q / p.a1, q / p.a2, q * p.a1 / p.a2, q * p.a2 / p.a1}) {
    if (pochhammer_inf_vanishes<R>(c, env)) {
      fail<R>(ErrorKind::kInvalidParameter,
              "connection coefficients need q/a_i and q a_i/a_j off q^{Z<=0}");
    }
  }
}

template <class R>
Trunc<R> coefficient(const Psi1<R>& p, int i, const Cx<R>& lambda, const Cx<R>& x,
                     bool complete, const Env<R>& env) {
  validate_coefficients<R>(p, env);
  const auto [ai, aj] = p.pair(i);
  const Cx<R> q = env.q;
  const Cx<R> one(R(1), R(0));
  std::vector<Cx<R>> num{one / aj, q * ai / aj, p.b1 / ai, q};
  std::vector<Cx<R>> den{p.b1, q / ai, ai / aj, q * aj / ai};
  if (complete) {
    num.push_back(q * aj);
    den.push_back(q / aj);
  }
  const Trunc<R> pre = qpoch_ratio<R>(num, den, env, "connection coefficient");
  const Trunc<R> t1 = theta_ratio<R>(ai * lambda / q, lambda / q, env);
  const Trunc<R> t2 = theta_ratio<R>(ai * q * x / lambda, q * x / lambda, env);
  const Trunc<R> t3 = theta_ratio<R>(x, ai * x, env);
  Cx<R> value = pre.value * t1.value * t2.value * t3.value;
  if (i == 2) value *= R(second_coefficient_sign());
  return combine<R>(value, {&pre, &t1, &t2, &t3});
}

}  // namespace qseries::detail
