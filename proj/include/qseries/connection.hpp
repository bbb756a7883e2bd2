#pragma once

#include "qseries/context.hpp"
#include "qseries/params.hpp"
#include "qseries/qcore.hpp"

namespace qseries {

/// Ramanujan's 1psi1 sum in product form,
///   (q, b/a, az, q/az; q)_inf / (b, q/a, z, b/az; q)_inf,
/// for |b/a| < |z| < 1.
TruncatedValue ramanujan_product(Complex a, Complex b, const QContext& ctx, Complex z);

/// y_inf^{(a,b)}(x) = theta(ax)/theta(x) * 2phi1(a, aq/c; aq/b; q, cq/(abx)),
/// a solution of Heine's equation around infinity.
TruncatedValue watson_y_infinity(Complex a, Complex b, Complex c, const QContext& ctx, Complex x);

/// Right-hand side of Watson's connection formula for 2phi1(a, b; c; q, x):
///   (b, c/a; q)_inf theta(-ax) / ((c, b/a; q)_inf theta(-x)) * theta(x)/theta(ax) * y_inf^{(a,b)}(x)
///   + idem(a; b).
/// Throws kInvalidParameter when a/b is in q^Z.
TruncatedValue watson_rhs(Complex a, Complex b, Complex c, const QContext& ctx, Complex x);

/// (b_1..b_r, q/a_1..q/a_r, x, q/x; q)_inf / (q a_1..q a_r, 1/a_1..1/a_r; q)_inf,
/// the factor multiplying r psi r on the left of Slater's formula.
TruncatedValue slater_prefactor(const SlaterParams& params, const QContext& ctx, Complex x);

/// The r-term idem sum on the right of Slater's formula.
TruncatedValue slater_rhs(const SlaterParams& params, const QContext& ctx, Complex x);

/// Two 1phi1 terms equal to 2psi2(a1, a2; b1, 0; q, x) for 0 < |x| < 1.
TruncatedValue corollary_2psi2_rhs(const Psi1Params& params, const QContext& ctx, Complex x);

/// Same closed form with no |x| < 1 check; it continues 2psi2(a1,a2;b1,0;q,x)
/// to all x outside q^Z.
TruncatedValue corollary_2psi2_continuation(const Psi1Params& params, const QContext& ctx,
                                            Complex x);

enum class SolutionIndex { kFirst = 1, kSecond = 2 };

/// v_i(x) = theta(a_i x)/theta(x) * 2phi1(q a_i/b1, 0; q a_i/a_j; q, b1/(a1 a2 x)),
/// solutions of the 2psi1 q-difference equation around infinity.
TruncatedValue v_solution(const Psi1Params& params, const QContext& ctx, SolutionIndex which,
                          Complex x);

/// Pochhammer normalization of the connection coefficients.
///
/// kComplete matches the Laplace resummation exactly. kOmitQajRatio drops the
/// constant factor (q a_j; q)_inf / (q/a_j; q)_inf from C_i; it is kept for
/// comparison only and does not reproduce the resummed value.
enum class CoefficientForm { kComplete, kOmitQajRatio };

struct ConnectionCoefficientSpec {
  Psi1Params params;
  SpiralSpec spiral;
  SolutionIndex which = SolutionIndex::kFirst;
  CoefficientForm form = CoefficientForm::kComplete;
};

/// Validates the extra non-resonance needed by C_1, C_2 (q/a_i, q a_i/a_j off
/// q^{Z<=0}). Throws kInvalidParameter.
void validate(const ConnectionCoefficientSpec& spec);

/// q-elliptic connection coefficient C_i(x); for i = 1
///   K_1 theta(a1 lambda/q)/theta(lambda/q) * theta(a1 q x/lambda)/theta(q x/lambda)
///       * theta(x)/theta(a1 x),
///   K_1 = (q a2, 1/a2, q a1/a2, b1/a1, q; q)_inf / (b1, q/a1, q/a2, a1/a2, q a2/a1; q)_inf.
TruncatedValue connection_coefficient(const ConnectionCoefficientSpec& spec, Complex x);

struct MainTheoremTerms {
  TruncatedValue first;   // C_1 v_1
  TruncatedValue second;  // C_2 v_2
  TruncatedValue total;
};

MainTheoremTerms main_theorem_terms(const Psi1Params& params, const SpiralSpec& spiral, Complex x,
                                    CoefficientForm form = CoefficientForm::kComplete);

/// C_1 v_1 + C_2 v_2.
TruncatedValue main_theorem_rhs(const Psi1Params& params, const SpiralSpec& spiral, Complex x,
                                CoefficientForm form = CoefficientForm::kComplete);

}  // namespace qseries
