#include "arsite/errors.hpp"

namespace arsite {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::incompatible_radicals: return "IncompatibleRadicals";
    case ErrorCode::non_positive_lambda: return "NonPositiveLambda";
    case ErrorCode::zero_scale: return "ZeroScale";
    case ErrorCode::zero_image: return "ZeroImage";
    case ErrorCode::zero_factor: return "ZeroFactor";
    case ErrorCode::negative_exponent: return "NegativeExponent";
    case ErrorCode::not_generated: return "NotGenerated";
    case ErrorCode::not_coprime: return "NotCoprime";
    case ErrorCode::rational_lambda: return "RationalLambda";
    case ErrorCode::window_too_small: return "WindowTooSmall";
    case ErrorCode::invalid_value: return "InvalidValue";
  }
  return "Unknown";
}

DomainError::DomainError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace arsite
