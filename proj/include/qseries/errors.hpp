#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qseries {

enum class ErrorKind {
  kInvalidContext,
  kInvalidParameter,
  kDivisionByVanishingFactor,
  kMaxTermsExceeded,
  kZeroArgument,
  kOutsideConvergenceDomain,
  kDivergentSeries,
  kDivergentAtOrigin,
  kSpiralCollision,
  kThetaPole,
  kThetaZero,
  kPoleInProduct,
  kConfigError,
  kIoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable; the message is
/// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Domain errors mean "the inputs are outside where the formula is
  /// defined", as opposed to a numerical failure.
  bool is_domain_error() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace qseries
