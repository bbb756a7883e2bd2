#include "qseries/errors.hpp"

namespace qseries {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidContext: return "InvalidContext";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kDivisionByVanishingFactor: return "DivisionByVanishingFactor";
    case ErrorKind::kMaxTermsExceeded: return "MaxTermsExceeded";
    case ErrorKind::kZeroArgument: return "ZeroArgument";
    case ErrorKind::kOutsideConvergenceDomain: return "OutsideConvergenceDomain";
    case ErrorKind::kDivergentSeries: return "DivergentSeries";
    case ErrorKind::kDivergentAtOrigin: return "DivergentAtOrigin";
    case ErrorKind::kSpiralCollision: return "SpiralCollision";
    case ErrorKind::kThetaPole: return "ThetaPole";
    case ErrorKind::kThetaZero: return "ThetaZero";
    case ErrorKind::kPoleInProduct: return "PoleInProduct";
    case ErrorKind::kConfigError: return "ConfigError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

bool Error::is_domain_error() const noexcept {
  switch (kind_) {
    case ErrorKind::kMaxTermsExceeded:
    case ErrorKind::kConfigError:
    case ErrorKind::kIoError:
      return false;
    default:
      return true;
  }
}

}  // namespace qseries
