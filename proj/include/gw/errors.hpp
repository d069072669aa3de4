#pragma once

#include <stdexcept>
#include <string>

namespace gw {

enum class ErrorCode {
  InvalidDimension,
  InvalidInput,
  InvalidAlgebra,
  AlgebraMismatch,
  NotCompactSemisimple,
  InvalidDescriptor,
  UnknownSpace,
  ZeroVector,
  SupportViolation,
  UnsupportedSpace,
  InvalidMetric,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gw
