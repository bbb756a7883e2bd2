#pragma once

#include <vector>

#include "qseries/context.hpp"

namespace qseries {

/// Parameters a1, a2, b1 of the divergent bilateral series
///   2psi1(a1, a2; b1; q, x) = sum_n (a1,a2;q)_n / (b1;q)_n * {(-1)^n q^{n(n-1)/2}}^{-1} x^n.
/// Construction rejects resonant inputs: b1 in q^{Z<=0}, a1 or a2 zero,
/// a1/a2 in q^Z.
class Psi1Params {
 public:
  Psi1Params(Complex a1, Complex a2, Complex b1, const QContext& ctx);

  Complex a1() const { return a1_; }
  Complex a2() const { return a2_; }
  Complex b1() const { return b1_; }

  /// Same series with a1 and a2 exchanged.
  Psi1Params swapped() const;

  /// |b1 / (a1 a2)|: the Laplace sum and v1, v2 need |x| above this.
  double certified_radius() const;

 private:
  Psi1Params(Complex a1, Complex a2, Complex b1) : a1_(a1), a2_(a2), b1_(b1) {}
  Complex a1_, a2_, b1_;
};

/// A q-spiral [lambda; q] = lambda q^Z carrying the context it lives in.
class SpiralSpec {
 public:
  static constexpr long kDefaultMaxTermsPerSide = 256;

  SpiralSpec(Complex lambda, const QContext& ctx,
             long max_terms_per_side = kDefaultMaxTermsPerSide);

  Complex lambda() const { return lambda_; }
  const QContext& ctx() const { return ctx_; }
  long max_terms_per_side() const { return max_terms_per_side_; }

  /// The same spiral with representative lambda q^k.
  SpiralSpec shifted(long k) const;

 private:
  Complex lambda_;
  QContext ctx_;
  long max_terms_per_side_;
};

/// Parameters of Slater's r psi r connection formula.
class SlaterParams {
 public:
  SlaterParams(std::vector<Complex> a, std::vector<Complex> b, const QContext& ctx);

  const std::vector<Complex>& a() const { return a_; }
  const std::vector<Complex>& b() const { return b_; }
  int r() const { return static_cast<int>(a_.size()); }

  /// |b_1 ... b_r / (a_1 ... a_r)|, inner radius of the annulus.
  double inner_radius() const;

 private:
  std::vector<Complex> a_, b_;
};

}  // namespace qseries
