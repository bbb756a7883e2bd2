#pragma once

#include <functional>
#include <string>

#include "qseries/context.hpp"
#include "qseries/params.hpp"

namespace qseries {

/// A bilateral coefficient sequence n -> a_n. The evaluator must be safe to
/// call concurrently.
struct BilateralCoefficients {
  std::function<Complex(long)> coeff;
  std::string description;
};

/// q-Borel transform: a_n -> a_n q^{n(n-1)/2}. Purely formal.
BilateralCoefficients q_borel_plus(const BilateralCoefficients& f, const QContext& ctx);

/// Coefficients of 2psi1(a1, a2; b1; q, x).
BilateralCoefficients psi1_coefficients(const Psi1Params& params, const QContext& ctx);

/// Coefficients of 2psi2(a1, a2; b1, 0; q, x).
BilateralCoefficients psi2_confluent_coefficients(const Psi1Params& params, const QContext& ctx);

using SpiralFunction = std::function<Complex(Complex)>;

/// q-Laplace transform as the Jackson sum
///   sum_{n in Z} psi(lambda q^n) / theta(lambda q^n / x).
/// Each side is truncated independently; if a side fails to decay within the
/// spiral's window the result has converged = false and `note` names the
/// side. Throws kSpiralCollision when x lies on -[lambda; q].
TruncatedValue q_laplace_plus(const SpiralFunction& psi, const SpiralSpec& spiral, Complex x);

enum class BorelBranch { kAuto, kDirect, kContinuation };

/// (B_q^+ 2psi1)(xi) = 2psi2(a1, a2; b1, 0; q, -xi).
///
/// kDirect sums the bilateral series (needs 0 < |xi| < 1); kContinuation uses
/// the two-1phi1 closed form (needs xi off -q^Z). kAuto picks kDirect inside
/// the unit disk.
TruncatedValue borel_image_2psi2(const Psi1Params& params, const QContext& ctx, Complex xi,
                                 BorelBranch branch = BorelBranch::kAuto);

/// Laplace resummation of the divergent 2psi1 along the spiral. Computed
/// without reference to the closed-form connection formula.
TruncatedValue resum_2psi1(const Psi1Params& params, const SpiralSpec& spiral, Complex x);

/// An entire function given both by its Taylor coefficients (n >= 0) and by
/// an independent evaluator.
struct EntireFunction {
  BilateralCoefficients coefficients;
  std::function<Complex(Complex)> evaluate;
};

/// |L(B f)(x) - f(x)| / max(|f(x)|, 1).
double roundtrip_check(const EntireFunction& f, const SpiralSpec& spiral, Complex x);

/// Sum of sum_{n >= 0} c_n xi^n for coefficient sequences of entire
/// functions; used to evaluate Borel images on the spiral.
TruncatedValue power_series(const BilateralCoefficients& c, const QContext& ctx, Complex xi);

}  // namespace qseries
