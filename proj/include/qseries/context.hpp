#pragma once

#include <complex>
#include <string>

namespace qseries {

using Complex = std::complex<double>;

/// Base q, working precision and truncation targets shared by every
/// evaluation. Immutable once constructed; validation happens in the
/// constructor so an existing QContext is always usable.
class QContext {
 public:
  static constexpr int kDoubleBits = 53;
  static constexpr int kQuadBits = 113;

  /// eps <= 0 selects 2^-precision_bits.
  explicit QContext(Complex q, int precision_bits = kDoubleBits, double eps = 0.0,
                    long max_terms = 4096);

  Complex q() const { return q_; }
  int precision_bits() const { return precision_bits_; }
  double eps() const { return eps_; }
  long max_terms() const { return max_terms_; }

  /// True when evaluations run in 113-bit arithmetic.
  bool extended() const { return precision_bits_ > kDoubleBits; }

  QContext with_precision(int bits) const;

 private:
  Complex q_;
  int precision_bits_;
  double eps_;
  long max_terms_;
};

/// A value together with how it was obtained by truncation.
///
/// `converged` implies `last_term_mag <= eps * max(|value|, 1)`. Compound
/// values (products of series and infinite products) report the worst
/// component bound rescaled to the compound value.
struct TruncatedValue {
  Complex value{0.0, 0.0};
  long terms_used_pos = 0;
  long terms_used_neg = 0;
  double last_term_mag = 0.0;
  bool converged = true;
  std::string note;
};

}  // namespace qseries
