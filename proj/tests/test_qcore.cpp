#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qseries/errors.hpp"
#include "qseries/qcore.hpp"

using namespace qseries;
using oracle::lift;
using oracle::lower;
using oracle::rel;

using testing::kind_of;

TEST_CASE("context validation") {
  CHECK(kind_of([] { QContext(0.0); }) == ErrorKind::kInvalidContext);
  CHECK(kind_of([] { QContext(1.0); }) == ErrorKind::kInvalidContext);
  CHECK(kind_of([] { QContext(Complex(0.6, 0.8)); }) == ErrorKind::kInvalidContext);
  CHECK(kind_of([] { QContext(0.5, 40); }) == ErrorKind::kInvalidContext);
  CHECK(kind_of([] { QContext(0.5, 200); }) == ErrorKind::kInvalidContext);
  const QContext ctx(0.5);
  CHECK(ctx.eps() == doctest::Approx(std::ldexp(1.0, -53)));
  CHECK(ctx.with_precision(113).extended());
}

TEST_CASE("finite q-Pochhammer against the product definition") {
  const Complex q(0.45, 0.2);
  for (Complex a : {Complex(0.3, -0.7), Complex(2.5, 0.0), Complex(-1.2, 0.4)}) {
    for (long n = -6; n <= 8; ++n) {
      const Complex got = qpochhammer(a, QContext(q), n);
      CHECK(rel(got, lower(oracle::poch(lift(a), lift(q), n))) < 1e-14);
    }
  }
  CHECK(qpochhammer(0.7, QContext(0.3), 0) == Complex(1.0));
}

TEST_CASE("finite q-Pochhammer edge cases") {
  const QContext ctx(0.5);
  // a = q^{-2}: the factor 1 - a q^2 vanishes, so (a;q)_n = 0 for n >= 3.
  CHECK(std::abs(qpochhammer(4.0, ctx, 5)) == 0.0);
  // a = q^3 with n = -4 divides by 1 - a q^{-3} = 0.
  CHECK(kind_of([&] { qpochhammer(0.125, ctx, -4); }) == ErrorKind::kDivisionByVanishingFactor);
}

TEST_CASE("q-Pochhammer additivity (a;q)_{m+n} = (a;q)_m (aq^m;q)_n") {
  const Complex q(0.35, -0.25);
  const QContext ctx(q);
  const Complex a(0.8, 0.6);
  for (long m = -4; m <= 4; ++m) {
    for (long n = -4; n <= 4; ++n) {
      const Complex lhs = qpochhammer(a, ctx, m + n);
      const Complex rhs = qpochhammer(a, ctx, m) * qpochhammer(a * std::pow(q, double(m)), ctx, n);
      CHECK(rel(lhs, rhs) < 1e-13);
    }
  }
}

TEST_CASE("infinite q-Pochhammer against a 2000-factor product") {
  for (Complex q : {Complex(0.3), Complex(0.5, 0.3), Complex(-0.8)}) {
    for (Complex a : {Complex(0.5), Complex(-2.0, 1.0), Complex(0.0, 0.1)}) {
      const TruncatedValue v = qpochhammer_inf(a, QContext(q));
      CHECK(v.converged);
      CHECK(rel(v.value, lower(oracle::poch_inf(lift(a), lift(q)))) < 1e-13);
    }
  }
  CHECK(qpochhammer_inf(0.0, QContext(0.5)).value == Complex(1.0));
  CHECK(std::abs(qpochhammer_inf(4.0, QContext(0.5)).value) == 0.0);  // a = q^{-2}
}

TEST_CASE("multi Pochhammer is the product of singles") {
  const QContext ctx(0.4);
  const Complex a(0.3, 0.2), b(-1.5), c(0.0, 2.0);
  const Complex expect = qpochhammer_inf(a, ctx).value * qpochhammer_inf(b, ctx).value *
                         qpochhammer_inf(c, ctx).value;
  CHECK(rel(qpochhammer_multi({a, b, c}, ctx).value, expect) < 1e-14);
}

TEST_CASE("theta against the bilateral sum") {
  for (Complex q : {Complex(0.1), Complex(0.5), Complex(0.3, 0.4)}) {
    for (Complex x : {Complex(0.7, 0.2), Complex(-3.0, 1.0), Complex(0.05, -0.1)}) {
      const TruncatedValue v = theta(x, QContext(q));
      CHECK(v.converged);
      CHECK(rel(v.value, lower(oracle::theta(lift(x), lift(q)))) < 1e-13);
    }
  }
}

TEST_CASE("theta zeros and errors") {
  const QContext ctx(0.5);
  CHECK(std::abs(theta(-1.0, ctx).value) < 1e-15);
  // zeros on -q^Z; compare with the size of theta nearby
  for (int k : {-3, 2}) {
    const Complex z = -std::pow(0.5, k);
    CHECK(std::abs(theta(z, ctx).value) < 1e-13 * std::abs(theta(z * Complex(1.0, 0.1), ctx).value));
  }
  CHECK(kind_of([&] { theta(0.0, ctx); }) == ErrorKind::kZeroArgument);
}

TEST_CASE("Jacobi triple product with complex q") {
  const Complex q(0.3, 0.4);
  const QContext ctx(q);
  for (Complex x : {Complex(0.4, 0.9), Complex(-2.2, -0.3), Complex(7.0, 1.0)}) {
    const Complex prod = qpochhammer_multi({q, -x, -q / x}, ctx).value;
    CHECK(rel(theta(x, ctx).value, prod) < 1e-13);
  }
}

TEST_CASE("phi: q-binomial theorem and Euler's product") {
  const Complex q(0.6, 0.1);
  const QContext ctx(q);
  const Complex a(1.7, -0.4);
  for (Complex x : {Complex(0.3, 0.2), Complex(-0.8), Complex(0.0, 0.95)}) {
    // 1phi0(a;-;q,x) = (ax;q)_inf / (x;q)_inf
    const Complex binom = qpochhammer_inf(a * x, ctx).value / qpochhammer_inf(x, ctx).value;
    CHECK(rel(phi_series(SeriesSpec::phi({a}, {}), ctx, x).value, binom) < 1e-12);
    // 0phi0(-;-;q,x) = (x;q)_inf
    CHECK(rel(phi_series(SeriesSpec::phi({}, {}), ctx, x).value, qpochhammer_inf(x, ctx).value) < 1e-12);
  }
}

TEST_CASE("phi against the term-by-term sum") {
  const Complex q(0.4);
  const QContext ctx(q);
  const std::vector<Complex> a{0.3, Complex(0.5, 0.5)}, b{Complex(-0.7, 0.1)};
  const Complex x(0.6, -0.3);
  const oracle::C ref = oracle::phi({lift(a[0]), lift(a[1])}, {lift(b[0])}, lift(q), lift(x));
  CHECK(rel(phi_series(SeriesSpec::phi(a, b), ctx, x).value, lower(ref)) < 1e-13);
  // r < s + 1: entire
  const Complex big(40.0, 10.0);
  const oracle::C ref2 = oracle::phi({lift(a[0])}, {lift(b[0])}, lift(q), lift(big));
  CHECK(rel(phi_series(SeriesSpec::phi({a[0]}, b), ctx, big).value, lower(ref2)) < 1e-12);
}

TEST_CASE("phi domain errors") {
  const QContext ctx(0.5);
  CHECK(kind_of([&] { phi_series(SeriesSpec::phi({0.3, 0.2, 0.1}, {0.4}), ctx, 0.1); }) ==
        ErrorKind::kDivergentSeries);
  CHECK(kind_of([&] { phi_series(SeriesSpec::phi({0.3}, {}), ctx, 1.2); }) ==
        ErrorKind::kOutsideConvergenceDomain);
  CHECK(kind_of([&] { phi_series(SeriesSpec::phi({0.3}, {4.0}), ctx, 0.2); }) ==
        ErrorKind::kDivisionByVanishingFactor);
}

TEST_CASE("psi against the term-by-term bilateral sum") {
  const Complex q(0.4);
  const QContext ctx(q);
  {
    const std::vector<Complex> a{2.0, Complex(1.5, 0.5)}, b{0.9, 0.5};
    const Complex x(0.5, 0.3);
    const oracle::C ref = oracle::psi({lift(a[0]), lift(a[1])}, {lift(b[0]), lift(b[1])}, lift(q), lift(x));
    CHECK(rel(psi_series(SeriesSpec::psi(a, b), ctx, x).value, lower(ref)) < 1e-13);
  }
  {
    // r < s: converges for |x| > |b1 b2 / a1|
    const std::vector<Complex> a{3.0}, b{0.5, Complex(0.2, 0.3)};
    const Complex x(1.2, -0.4);
    const oracle::C ref = oracle::psi({lift(a[0])}, {lift(b[0]), lift(b[1])}, lift(q), lift(x));
    CHECK(rel(psi_series(SeriesSpec::psi(a, b), ctx, x).value, lower(ref)) < 1e-13);
  }
}

TEST_CASE("psi domain errors") {
  const QContext ctx(0.5);
  CHECK(kind_of([&] { psi_series(SeriesSpec::psi({0.7, 0.3}, {0.9}), ctx, 2.0); }) ==
        ErrorKind::kDivergentAtOrigin);
  CHECK(kind_of([&] { psi_series(SeriesSpec::psi({2.0}, {0.9}), ctx, 0.3); }) ==
        ErrorKind::kOutsideConvergenceDomain);
  CHECK(kind_of([&] { psi_series(SeriesSpec::psi({2.0}, {0.9}), ctx, 1.1); }) ==
        ErrorKind::kOutsideConvergenceDomain);
  CHECK(kind_of([&] { psi_series(SeriesSpec::psi({0.25}, {0.9}), ctx, 0.5); }) ==
        ErrorKind::kDivisionByVanishingFactor);
  CHECK(kind_of([&] { psi_series(SeriesSpec::psi({2.0}, {4.0}), ctx, 0.5); }) ==
        ErrorKind::kDivisionByVanishingFactor);
}

TEST_CASE("extended precision agrees with double") {
  const Complex q(0.45, 0.1);
  const Complex x(0.8, -1.3);
  const TruncatedValue d = theta(x, QContext(q));
  const TruncatedValue e = theta(x, QContext(q, 113));
  CHECK(rel(d.value, e.value) < 1e-14);
  CHECK(rel(e.value, lower(oracle::theta(lift(x), lift(q)))) < 1e-15);
  const SeriesSpec s = SeriesSpec::psi({2.0}, {0.9});
  CHECK(rel(psi_series(s, QContext(q), 0.7).value, psi_series(s, QContext(q, 113), 0.7).value) < 1e-14);
}

TEST_CASE("lattice membership") {
  const QContext ctx(0.5);
  CHECK(on_q_lattice(0.125, ctx, 0, 5));
  CHECK_FALSE(on_q_lattice(0.125, ctx, -5, 2));
  CHECK(on_q_lattice(8.0, ctx, -5, 0));
  CHECK_FALSE(on_q_lattice(0.13, ctx, -5, 5));
  CHECK(resonance_tolerance(ctx) > 0.0);
}
