#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "qseries/context.hpp"
#include "qseries/errors.hpp"

namespace qseries::detail {

using Quad = boost::multiprecision::float128;
using QuadComplex = boost::multiprecision::complex128;

template <class R>
struct ComplexOf;
template <>
struct ComplexOf<double> {
  using type = std::complex<double>;
};
template <>
struct ComplexOf<Quad> {
  using type = QuadComplex;
};

template <class R>
using Cx = typename ComplexOf<R>::type;

template <class R>
Cx<R> lift(Complex z) {
  return Cx<R>(R(z.real()), R(z.imag()));
}

template <class C>
Complex lower(const C& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class R>
R machine_epsilon() {
  return std::numeric_limits<R>::epsilon();
}

template <class R>
R mag(const Cx<R>& z) {
  using std::abs;
  return abs(z);
}

template <class R>
Cx<R> clog(const Cx<R>& z) {
  using std::log;
  return log(z);
}

template <class R>
Cx<R> cexp(const Cx<R>& z) {
  using std::exp;
  return exp(z);
}

template <class R>
bool is_finite(const Cx<R>& z) {
  const R big = std::numeric_limits<R>::max();
  using std::abs;
  const R re = z.real();
  const R im = z.imag();
  return abs(re) <= big && abs(im) <= big;
}

template <class R>
bool is_zero(const Cx<R>& z) {
  return z.real() == R(0) && z.imag() == R(0);
}

/// z^n for integer n by repeated squaring.
template <class R>
Cx<R> ipow(Cx<R> base, long n) {
  const bool invert = n < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Cx<R> result(R(1), R(0));
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return invert ? Cx<R>(R(1), R(0)) / result : result;
}

/// The evaluation environment lifted to scalar type R.
template <class R>
struct Env {
  Cx<R> q;
  R q_abs;
  R eps;
  R tol;  // resonance tolerance
  long max_terms;

  explicit Env(const QContext& ctx)
      : q(lift<R>(ctx.q())),
        q_abs(mag<R>(q)),
        eps(R(ctx.eps())),
        tol(R(1000) * machine_epsilon<R>()),
        max_terms(ctx.max_terms()) {}
};

template <class R>
struct Trunc {
  Cx<R> value{R(0), R(0)};
  long pos = 0;
  long neg = 0;
  R last = R(0);
  bool converged = true;
  std::string note;
};

template <class R>
TruncatedValue to_public(const Trunc<R>& t) {
  TruncatedValue out;
  out.value = lower(t.value);
  out.terms_used_pos = t.pos;
  out.terms_used_neg = t.neg;
  out.last_term_mag = static_cast<double>(t.last);
  out.converged = t.converged;
  out.note = t.note;
  return out;
}

template <class R>
Trunc<R> from_public(const TruncatedValue& t) {
  Trunc<R> out;
  out.value = lift<R>(t.value);
  out.pos = t.terms_used_pos;
  out.neg = t.terms_used_neg;
  out.last = R(t.last_term_mag);
  out.converged = t.converged;
  out.note = t.note;
  return out;
}

/// Attaches the truncation reports of `parts` to `value`. The relative tail
/// bound of each part is rescaled to the magnitude of the compound value.
template <class R>
Trunc<R> combine(const Cx<R>& value, std::initializer_list<const Trunc<R>*> parts) {
  Trunc<R> out;
  out.value = value;
  R rel(0);
  for (const Trunc<R>* p : parts) {
    out.pos += p->pos;
    out.neg += p->neg;
    out.converged = out.converged && p->converged;
    const R denom = std::max(mag<R>(p->value), R(1));
    rel = std::max(rel, p->last / denom);
    if (!p->note.empty()) {
      if (!out.note.empty()) out.note += "; ";
      out.note += p->note;
    }
  }
  out.last = rel * std::max(mag<R>(value), R(1));
  return out;
}

template <class R>
Trunc<R> combine(const Cx<R>& value, const std::vector<Trunc<R>>& parts) {
  Trunc<R> out;
  out.value = value;
  R rel(0);
  for (const Trunc<R>& p : parts) {
    out.pos += p.pos;
    out.neg += p.neg;
    out.converged = out.converged && p.converged;
    const R denom = std::max(mag<R>(p.value), R(1));
    rel = std::max(rel, p.last / denom);
    if (!p.note.empty()) {
      if (!out.note.empty()) out.note += "; ";
      out.note += p.note;
    }
  }
  out.last = rel * std::max(mag<R>(value), R(1));
  return out;
}

/// One direction of a series. A direction is finished once the term
/// magnitude has stayed below eps * max(|partial|, 1) for three consecutive
/// terms while not increasing. `order_key` is the quantity used for the
/// "not increasing" test; callers summing in log form pass Re(log term) so
/// that underflowed terms ahead of the peak are not mistaken for a tail.
template <class R>
class SideSum {
 public:
  static constexpr int kRunLength = 3;

  explicit SideSum(R eps) : eps_(eps) {}

  /// Returns true once this direction is finished.
  bool add(const Cx<R>& term, R order_key) {
    ++count_;
    if (!is_finite<R>(term)) {
      overflow_ = true;
      return true;
    }
    sum_ += term;
    const R m = mag<R>(term);
    last_ = m;
    const bool small = m <= eps_ * std::max(mag<R>(sum_), R(1));
    const bool non_increasing = have_prev_ ? order_key <= prev_key_ : false;
    prev_key_ = order_key;
    have_prev_ = true;
    run_ = (small && non_increasing) ? run_ + 1 : 0;
    if (run_ >= kRunLength) done_ = true;
    return done_;
  }

  bool add(const Cx<R>& term) { return add(term, mag<R>(term)); }

  /// Marks the direction finished because every further term is exactly 0.
  void terminate() { done_ = true; }

  const Cx<R>& sum() const { return sum_; }
  long count() const { return count_; }
  R last() const { return last_; }
  bool done() const { return done_; }
  bool overflow() const { return overflow_; }
  bool converged() const { return done_ && !overflow_; }

 private:
  R eps_;
  Cx<R> sum_{R(0), R(0)};
  long count_ = 0;
  int run_ = 0;
  R last_ = R(0);
  R prev_key_ = R(0);
  bool have_prev_ = false;
  bool done_ = false;
  bool overflow_ = false;
};

/// Runs `fn` with R = double or R = Quad according to the context.
template <class F>
decltype(auto) dispatch(const QContext& ctx, F&& fn) {
  if (ctx.extended()) return fn(Quad{});
  return fn(double{});
}

}  // namespace qseries::detail
