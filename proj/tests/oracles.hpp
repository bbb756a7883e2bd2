#pragma once

// Brute-force reference implementations in long double. They follow the
// textbook definitions term by term and share no code with the library.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<long double>;

inline C poch(C a, C q, long n) {
  C p = 1.0L;
  if (n >= 0) {
    for (long k = 0; k < n; ++k) p *= 1.0L - a * std::pow(q, static_cast<long double>(k));
    return p;
  }
  for (long k = 1; k <= -n; ++k) p *= 1.0L - a * std::pow(q, static_cast<long double>(-k));
  return 1.0L / p;
}

inline C poch_inf(C a, C q, int factors = 2000) {
  C p = 1.0L;
  C qk = 1.0L;
  for (int k = 0; k < factors; ++k) {
    p *= 1.0L - a * qk;
    qk *= q;
  }
  return p;
}

inline C theta(C x, C q, long n_max = 120) {
  C s = 0.0L;
  for (long n = -n_max; n <= n_max; ++n) {
    s += std::pow(q, static_cast<long double>(n * (n - 1) / 2)) * std::pow(x, static_cast<long double>(n));
  }
  return s;
}

// ((-1)^n q^{n(n-1)/2})^p, by repeated multiplication so that an underflowed
// base with p = 0 still gives 1
inline C tri(C q, long n, long p) {
  const C base = ((n % 2 == 0) ? 1.0L : -1.0L) * std::pow(q, static_cast<long double>(n * (n - 1) / 2));
  C out = 1.0L;
  for (long k = 0; k < std::abs(p); ++k) out *= base;
  return p < 0 ? 1.0L / out : out;
}

// Both sums build each term from its neighbour, t_{n+1} = t_n * ratio(n), so
// that long products never overflow. ratio(n) comes straight from
// (a;q)_{n+1} = (a;q)_n (1 - a q^n).
inline C phi(const std::vector<C>& a, const std::vector<C>& b, C q, C x, long n_max = 200) {
  const long e = 1 + static_cast<long>(b.size()) - static_cast<long>(a.size());
  C sum = 0.0L, t = 1.0L, qn = 1.0L;
  for (long n = 0; n <= n_max; ++n) {
    sum += t;
    C r = x / (1.0L - qn * q);
    for (const C& ai : a) r *= 1.0L - ai * qn;
    for (const C& bj : b) r /= 1.0L - bj * qn;
    for (long k = 0; k < std::abs(e); ++k) r = e > 0 ? r * -qn : r / -qn;
    t *= r;
    qn *= q;
  }
  return sum;
}

inline C psi(const std::vector<C>& a, const std::vector<C>& b, C q, C x, long n_max = 80) {
  const long e = static_cast<long>(b.size()) - static_cast<long>(a.size());
  auto ratio = [&](C qn) {  // t_{n+1} / t_n with qn = q^n
    C r = x;
    for (const C& ai : a) r *= 1.0L - ai * qn;
    for (const C& bj : b) r /= 1.0L - bj * qn;
    for (long k = 0; k < std::abs(e); ++k) r = e > 0 ? r * -qn : r / -qn;
    return r;
  };
  C sum = 0.0L, t = 1.0L, qn = 1.0L;
  for (long n = 0; n <= n_max; ++n) {
    sum += t;
    t *= ratio(qn);
    qn *= q;
  }
  t = 1.0L;
  qn = 1.0L / q;
  for (long n = -1; n >= -n_max; --n) {
    t /= ratio(qn);
    sum += t;
    qn /= q;
  }
  return sum;
}

inline std::complex<double> lower(C v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

inline C lift(std::complex<double> v) { return {v.real(), v.imag()}; }

inline double rel(std::complex<double> a, std::complex<double> b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace oracle
