#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qseries/connection.hpp"
#include "qseries/qcore.hpp"
#include "qseries/resummation.hpp"
#include "qseries/verify.hpp"

using namespace qseries;
using oracle::C;
using oracle::lift;
using oracle::lower;
using oracle::rel;
using testing::kind_of;

namespace {

constexpr double kPi = std::numbers::pi;

C prod_inf(std::initializer_list<C> as, C q) {
  C p = 1.0L;
  for (const C& a : as) p *= oracle::poch_inf(a, q);
  return p;
}

}  // namespace

TEST_CASE("Ramanujan's 1psi1 sum against the bilateral series") {
  struct Row { Complex q, a, b, z; };
  const Row rows[] = {{0.3, 0.5, 0.2, 0.65},
                      {0.5, Complex(2.0, 1.0), 0.4, Complex(0.3, 0.2)},
                      {0.4, -1.5, Complex(0.0, 0.3), std::polar(0.9, -2.0)},
                      {Complex(0.2, 0.1), 0.8, 0.1, Complex(0.2, -0.6)}};
  for (const Row& r : rows) {
    const QContext ctx(r.q);
    const C ref = oracle::psi({lift(r.a)}, {lift(r.b)}, lift(r.q), lift(r.z), 450);
    CHECK(rel(ramanujan_product(r.a, r.b, ctx, r.z).value, lower(ref)) < 1e-12);
  }
  CHECK(kind_of([] { ramanujan_product(0.5, 0.2, QContext(0.3), 0.3); }) ==
        ErrorKind::kOutsideConvergenceDomain);
}

TEST_CASE("Watson's connection formula on the overlap of both domains") {
  struct Row { double q; Complex a, b, c, x; };
  const Row rows[] = {{0.5, 5.0, 4.0, 0.3, 0.45},
                      {0.5, 5.0, 4.0, 0.3, Complex(0.3, 0.3)},
                      {0.3, Complex(3.0, 1.0), 6.0, 0.2, std::polar(0.8, -2.0)},
                      {0.6, 2.0, -3.0, Complex(0.5, 0.5), Complex(0.0, 0.7)}};
  for (const Row& r : rows) {
    const QContext ctx(r.q);
    const C ref = oracle::phi({lift(r.a), lift(r.b)}, {lift(r.c)}, r.q, lift(r.x), 400);
    CHECK(rel(watson_rhs(r.a, r.b, r.c, ctx, r.x).value, lower(ref)) < 1e-11);
  }
}

TEST_CASE("Watson's formula: resonant and singular inputs") {
  const QContext ctx(0.5);
  // a/b = q^2
  CHECK(kind_of([&] { watson_rhs(1.0, 4.0, 0.3, ctx, 0.45); }) == ErrorKind::kInvalidParameter);
  // x = q puts a zero of theta(-x) in the denominator
  CHECK(kind_of([&] { watson_rhs(5.0, 4.0, 0.3, ctx, 0.5); }) == ErrorKind::kThetaZero);
  CHECK(kind_of([&] { watson_y_infinity(5.0, 4.0, 0.3, ctx, 0.001); }) ==
        ErrorKind::kOutsideConvergenceDomain);
}

TEST_CASE("y_inf and 2phi1 both solve Heine's equation") {
  const QContext ctx(0.5);
  const Complex a = 5.0, b = 4.0, c = 0.3;
  const QDifferenceEquation eq = heine_equation(a, b, c, ctx);
  const Complex x(0.3, 0.3);
  const ResidualResult r1 = qde_residual(
      eq, [&](Complex y) { return watson_y_infinity(a, b, c, ctx, y).value; }, x);
  const ResidualResult r2 = qde_residual(
      eq, [&](Complex y) { return phi_series(SeriesSpec::phi({a, b}, {c}), ctx, y).value; }, x);
  CHECK(r1.residual < 1e-13);
  CHECK(r2.residual < 1e-13);
}

TEST_CASE("Slater's formula for r = 1, 2, 3") {
  const Complex q = 0.4;
  const std::vector<Complex> a3{2.0, Complex(1.5, 0.5), 3.0};
  const std::vector<Complex> b3{0.9, 0.5, 0.7};
  const QContext ctx(q);
  for (int r = 1; r <= 3; ++r) {
    const std::vector<Complex> a(a3.begin(), a3.begin() + r), b(b3.begin(), b3.begin() + r);
    const SlaterParams p(a, b, ctx);
    for (Complex x : {Complex(0.5, 0.3), Complex(0.0, 0.6), std::polar(0.8, 2.5)}) {
      std::vector<C> al, bl;
      C num = 1.0L, den = 1.0L;
      for (int i = 0; i < r; ++i) {
        al.push_back(lift(a[i]));
        bl.push_back(lift(b[i]));
        num *= prod_inf({lift(b[i]), lift(q / a[i])}, lift(q));
        den *= prod_inf({lift(q * a[i]), lift(1.0 / a[i])}, lift(q));
      }
      num *= prod_inf({lift(x), lift(q / x)}, lift(q));
      const C lhs = num / den * oracle::psi(al, bl, lift(q), lift(x), 250);
      CHECK(rel(slater_prefactor(p, ctx, x).value, lower(num / den)) < 1e-12);
      CHECK(rel(slater_rhs(p, ctx, x).value, lower(lhs)) < 1e-11);
    }
  }
  CHECK(kind_of([&] { slater_rhs(SlaterParams({0.7, 0.3}, {0.9, 0.5}, QContext(0.5)), QContext(0.5), 0.8); }) ==
        ErrorKind::kOutsideConvergenceDomain);
  CHECK(kind_of([&] { SlaterParams({2.0, 0.5}, {0.9, 0.5}, QContext(0.5)); }) ==
        ErrorKind::kInvalidParameter);
}

TEST_CASE("confluent 2psi2 formula against the bilateral series") {
  const QContext ctx(0.4);
  const Psi1Params p(0.7, 0.3, 0.9, ctx);
  for (Complex x : {Complex(0.5), Complex(0.3, 0.2), Complex(-0.6), std::polar(0.15, 2.2)}) {
    const C ref = oracle::psi({0.7L, 0.3L}, {0.9L, 0.0L}, 0.4L, lift(x), 120);
    CHECK(rel(corollary_2psi2_rhs(p, ctx, x).value, lower(ref)) < 1e-12);
  }
  CHECK(kind_of([&] { corollary_2psi2_rhs(p, ctx, 1.5); }) == ErrorKind::kOutsideConvergenceDomain);
}

TEST_CASE("Slater r = 2 tends to the confluent formula as b2 -> 0") {
  const QContext ctx(0.4);
  const Psi1Params p(0.7, 0.3, 0.9, ctx);
  const Complex x(0.3, 0.2);
  const Complex limit = corollary_2psi2_rhs(p, ctx, x).value;
  double previous = INFINITY;
  for (double b2 : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
    const SlaterParams sp({0.7, 0.3}, {0.9, b2}, ctx);
    const Complex v = slater_rhs(sp, ctx, x).value / slater_prefactor(sp, ctx, x).value;
    const double d = rel(v, limit);
    CHECK(d < previous);
    CHECK(d < 100 * b2);
    previous = d;
  }
}

TEST_CASE("v1 and v2 solve the 2psi1 q-difference equation") {
  const QContext ctx(0.4);
  const Psi1Params p(0.7, 0.3, 0.9, ctx);
  const QDifferenceEquation eq = psi1_equation(p, ctx);
  for (SolutionIndex which : {SolutionIndex::kFirst, SolutionIndex::kSecond}) {
    const ResidualResult r = qde_residual(
        eq, [&](Complex y) { return v_solution(p, ctx, which, y).value; }, std::polar(40.0, kPi / 5));
    CHECK(r.residual < 1e-13);
  }
  CHECK(kind_of([&] { v_solution(p, ctx, SolutionIndex::kFirst, 2.0); }) ==
        ErrorKind::kOutsideConvergenceDomain);
}

TEST_CASE("Psi1 parameter validation") {
  const QContext ctx(0.5);
  CHECK(kind_of([&] { Psi1Params(0.0, 0.3, 0.9, ctx); }) == ErrorKind::kInvalidParameter);
  CHECK(kind_of([&] { Psi1Params(0.7, 0.3, 4.0, ctx); }) == ErrorKind::kInvalidParameter);
  CHECK(kind_of([&] { Psi1Params(0.8, 0.2, 0.9, ctx); }) == ErrorKind::kInvalidParameter);
  CHECK(kind_of([&] { Psi1Params(0.25, 0.3, 0.9, ctx); }) == ErrorKind::kInvalidParameter);
  const Psi1Params p(0.7, 0.3, 0.9, ctx);
  CHECK(p.swapped().a1() == Complex(0.3));
  CHECK(p.certified_radius() == doctest::Approx(0.9 / 0.21));
}

TEST_CASE("connection formula reproduces the resummed 2psi1") {
  struct Row { double q; Complex a1, a2, b1, lambda, x; };
  const Row rows[] = {
      {0.4, 0.7, 0.3, 0.9, std::polar(1.1, kPi / 7), std::polar(40.0, kPi / 5)},
      {0.4, 2.0, 1.5, 0.5, std::polar(1.1, kPi / 7), std::polar(2.3, kPi / 5)},
      {0.5, Complex(1.2, 0.8), -2.0, Complex(0.0, 0.3), std::polar(0.9, 1.0), std::polar(1.0, 0.7)},
  };
  for (const Row& r : rows) {
    const QContext ctx(r.q);
    const Psi1Params p(r.a1, r.a2, r.b1, ctx);
    const SpiralSpec spiral(r.lambda, ctx);
    const TruncatedValue l = resum_2psi1(p, spiral, r.x);
    const MainTheoremTerms t = main_theorem_terms(p, spiral, r.x);
    REQUIRE(l.converged);
    CHECK(rel(t.total.value, t.first.value + t.second.value) < 1e-15);
    CHECK(rel(l.value, t.total.value) < 1e-11);
  }
}

TEST_CASE("coefficients without the ratio differ by (q a_j;q)_inf / (q/a_j;q)_inf") {
  const QContext ctx(0.4);
  const Psi1Params p(0.7, 0.3, 0.9, ctx);
  const SpiralSpec spiral(std::polar(1.1, kPi / 7), ctx);
  const Complex x = std::polar(40.0, kPi / 5);
  for (SolutionIndex which : {SolutionIndex::kFirst, SolutionIndex::kSecond}) {
    const C aj = which == SolutionIndex::kFirst ? 0.3L : 0.7L;
    const C factor = oracle::poch_inf(0.4L * aj, 0.4L) / oracle::poch_inf(0.4L / aj, 0.4L);
    const Complex complete =
        connection_coefficient({p, spiral, which, CoefficientForm::kComplete}, x).value;
    const Complex reduced =
        connection_coefficient({p, spiral, which, CoefficientForm::kOmitQajRatio}, x).value;
    CHECK(rel(complete / reduced, lower(factor)) < 1e-13);
  }
  // and without the ratio the formula does not hold
  const Complex l = resum_2psi1(p, spiral, x).value;
  CHECK(rel(l, main_theorem_rhs(p, spiral, x, CoefficientForm::kOmitQajRatio).value) > 1e-2);
}

TEST_CASE("two normalizations of the theta ratio in C_i agree") {
  // theta(a q x / lambda) / theta(q x / lambda) == theta(lambda / (a x)) / theta(lambda / x)
  const C q = 0.4L;
  const C lambda = std::polar(1.1L, 0.45L);
  for (C a : {C(0.7L), C(1.2L, 0.8L)}) {
    for (C x : {std::polar(3.0L, 0.6L), std::polar(0.7L, -2.0L)}) {
      const C lhs = oracle::theta(a * q * x / lambda, q) / oracle::theta(q * x / lambda, q);
      const C rhs = oracle::theta(lambda / (a * x), q) / oracle::theta(lambda / x, q);
      CHECK(rel(lower(lhs), lower(rhs)) < 1e-15);
    }
  }
}

TEST_CASE("connection coefficients are q-elliptic and independent of the spiral representative") {
  const QContext ctx(0.4);
  const Psi1Params p(2.0, 1.5, 0.5, ctx);
  const SpiralSpec spiral(std::polar(1.3, -0.6), ctx);
  for (SolutionIndex which : {SolutionIndex::kFirst, SolutionIndex::kSecond}) {
    const ConnectionCoefficientSpec spec{p, spiral, which, CoefficientForm::kComplete};
    const ConnectionCoefficientSpec shifted{p, spiral.shifted(1), which, CoefficientForm::kComplete};
    for (Complex x : {std::polar(0.8, 1.0), std::polar(3.1, -2.2)}) {
      const Complex c0 = connection_coefficient(spec, x).value;
      CHECK(std::abs(connection_coefficient(spec, 0.4 * x).value - c0) < 1e-12 * (std::abs(c0) + 1));
      CHECK(rel(connection_coefficient(shifted, x).value, c0) < 1e-12);
    }
  }
}
