#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arsite {

/// Domain failures raised by library operations. Each carries a stable code
/// that the CLI reports verbatim in its error JSON.
enum class ErrorCode {
  incompatible_radicals,
  non_positive_lambda,
  zero_scale,
  zero_image,
  zero_factor,
  negative_exponent,
  not_generated,
  not_coprime,
  rational_lambda,
  window_too_small,
  invalid_value,
};

std::string_view to_string(ErrorCode code) noexcept;

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when serialized input is structurally malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arsite
