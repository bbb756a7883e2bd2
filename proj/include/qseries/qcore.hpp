#pragma once

#include <span>
#include <vector>

#include "qseries/context.hpp"
#include "qseries/errors.hpp"

namespace qseries {

enum class SeriesKind { kUnilateralPhi, kBilateralPsi };

/// Parameters a_1..a_r (numerator) and b_1..b_s (denominator) of one basic
/// hypergeometric series.
struct SeriesSpec {
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;
  SeriesKind kind = SeriesKind::kUnilateralPhi;

  static SeriesSpec phi(std::vector<Complex> a, std::vector<Complex> b) {
    return {std::move(a), std::move(b), SeriesKind::kUnilateralPhi};
  }
  static SeriesSpec psi(std::vector<Complex> a, std::vector<Complex> b) {
    return {std::move(a), std::move(b), SeriesKind::kBilateralPsi};
  }
};

/// (a;q)_n for any integer n, using the three-case finite product.
Complex qpochhammer(Complex a, const QContext& ctx, long n);

/// (a;q)_inf by partial products, stopped once the multiplicative tail bound
/// |a q^k| / (1 - |q|) drops below eps.
TruncatedValue qpochhammer_inf(Complex a, const QContext& ctx);

/// (a_1, ..., a_m; q)_inf.
TruncatedValue qpochhammer_multi(std::span<const Complex> as, const QContext& ctx);
TruncatedValue qpochhammer_multi(std::initializer_list<Complex> as, const QContext& ctx);

/// Jacobi theta function sum_{n in Z} q^{n(n-1)/2} x^n as a bilateral sum.
TruncatedValue theta(Complex x, const QContext& ctx);

/// Unilateral r phi s series at x.
TruncatedValue phi_series(const SeriesSpec& spec, const QContext& ctx, Complex x);

/// Bilateral r psi s series at x, inside its annulus of convergence.
TruncatedValue psi_series(const SeriesSpec& spec, const QContext& ctx, Complex x);

/// True when y = q^k (within the resonance tolerance) for some k in
/// [k_min, k_max].
bool on_q_lattice(Complex y, const QContext& ctx, long k_min, long k_max);

/// Resonance threshold: factors smaller than this are treated as zero.
double resonance_tolerance(const QContext& ctx);

}  // namespace qseries
