#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvlab {

enum class ErrorCode {
  NonFinite,
  NonzeroConstantTerm,
  NotNormalized,
  CriticalBasepoint,
  NotSymmetric,
  DegreeMismatch,
  DegreeTooSmall,
  DegreeTooHigh,
  NoConvergence,
  DerivativeVanished,
  GuaranteeViolated,
  InvalidArgument,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Base exception for every failure raised by the library. The code is the
// stable identifier; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mvlab
