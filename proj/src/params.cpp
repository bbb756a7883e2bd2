#include "qseries/params.hpp"

#include <cmath>

#include "qseries/errors.hpp"
#include "qseries/qcore.hpp"

namespace qseries {
namespace {

constexpr long kSpan = 1L << 20;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kInvalidParameter, what);
}

}  // namespace

Psi1Params::Psi1Params(Complex a1, Complex a2, Complex b1, const QContext& ctx)
    : a1_(a1), a2_(a2), b1_(b1) {
  require(a1 != 0.0 && a2 != 0.0, "a1 and a2 must be nonzero");
  require(!on_q_lattice(b1, ctx, -kSpan, 0), "b1 lies in q^{Z<=0}");
  require(!on_q_lattice(a1, ctx, 1, kSpan) && !on_q_lattice(a2, ctx, 1, kSpan),
          "a1 or a2 lies in q^{Z>=1}");
  require(!on_q_lattice(a1 / a2, ctx, -kSpan, kSpan), "a1/a2 lies in q^Z (resonant pair)");
}

Psi1Params Psi1Params::swapped() const { return Psi1Params(a2_, a1_, b1_); }

double Psi1Params::certified_radius() const { return std::abs(b1_ / (a1_ * a2_)); }

SpiralSpec::SpiralSpec(Complex lambda, const QContext& ctx, long max_terms_per_side)
    : lambda_(lambda), ctx_(ctx), max_terms_per_side_(max_terms_per_side) {
  require(lambda != 0.0, "lambda must be nonzero");
  require(!on_q_lattice(lambda, ctx, -kSpan, kSpan), "lambda lies in q^Z");
  require(max_terms_per_side >= 8, "max_terms_per_side must be at least 8");
}

SpiralSpec SpiralSpec::shifted(long k) const {
  return SpiralSpec(lambda_ * std::pow(ctx_.q(), static_cast<double>(k)), ctx_,
                    max_terms_per_side_);
}

SlaterParams::SlaterParams(std::vector<Complex> a, std::vector<Complex> b, const QContext& ctx)
    : a_(std::move(a)), b_(std::move(b)) {
  require(!a_.empty(), "r must be at least 1");
  require(a_.size() == b_.size(), "Slater's formula needs r numerator and r denominator parameters");
  for (const auto& ai : a_) require(ai != 0.0, "numerator parameters must be nonzero");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (std::size_t j = i + 1; j < a_.size(); ++j) {
      require(!on_q_lattice(a_[i] / a_[j], ctx, -kSpan, kSpan),
              "a_i/a_j lies in q^Z (resonant pair)");
    }
  }
  for (const auto& bj : b_) require(!on_q_lattice(bj, ctx, -kSpan, 0), "b_j lies in q^{Z<=0}");
}

double SlaterParams::inner_radius() const {
  double p = 1.0;
  for (std::size_t i = 0; i < a_.size(); ++i) p *= std::abs(b_[i]) / std::abs(a_[i]);
  return p;
}

}  // namespace qseries
