#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starlike {

/// Failure categories raised by the toolkit. Every throw site uses MathError
/// with one of these codes so callers (and the CLI) can dispatch on kind.
enum class ErrorCode {
  ZeroConstantTerm,
  NonUnitBase,
  PoleParameter,
  OriginPoint,
  EvaluationFailure,
  ZeroOnCircle,
  NotApplicable,
  ZeroDerivative,
  ZeroDenominator,
  DomainError,
  SingularParameter,
  NotNormalized,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starlike
