#include "qseries/context.hpp"

#include <cmath>
#include <sstream>

#include "qseries/errors.hpp"

namespace qseries {

QContext::QContext(Complex q, int precision_bits, double eps, long max_terms)
    : q_(q), precision_bits_(precision_bits), eps_(eps), max_terms_(max_terms) {
  const double aq = std::abs(q);
  if (!(aq > 0.0 && aq < 1.0)) {
    std::ostringstream os;
    os << "need 0 < |q| < 1, got |q| = " << aq;
    throw Error(ErrorKind::kInvalidContext, os.str());
  }
  if (precision_bits < kDoubleBits || precision_bits > kQuadBits) {
    throw Error(ErrorKind::kInvalidContext, "precision_bits must lie in [53, 113]");
  }
  if (eps_ <= 0.0) eps_ = std::ldexp(1.0, -precision_bits);
  if (!std::isfinite(eps_)) throw Error(ErrorKind::kInvalidContext, "eps must be finite");
  if (max_terms < 8) throw Error(ErrorKind::kInvalidContext, "max_terms must be at least 8");
}

QContext QContext::with_precision(int bits) const {
  return QContext(q_, bits, 0.0, max_terms_);
}

}  // namespace qseries
