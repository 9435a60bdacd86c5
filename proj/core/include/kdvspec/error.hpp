#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdvspec {

enum class ErrorCode {
  ZeroDenominator,
  NonSquare,
  ZeroPolynomial,
  DivisionByZero,
  InexactDivision,
  BasisMismatch,
  NotTotalDerivative,
  ModeMismatch,
  DivisionByZeroOperator,
  IndexOutOfRange,
  OrderTooLow,
  LevelNotFound,
  Underdetermined,
  IndexBelowLevel,
  NonConstantPotential,
  NonConstantCoefficient,
  ShapeMismatch,
  ZeroOnCurve,
  ZeroSubresultant,
  NotOnCurve,
  VanishingPhi2,
  UnsupportedShape,
  NoHyperexponentialSolution,
  UnsupportedTower,
  SyntaxError,
  UnknownSymbol,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above; the
/// message adds context (stage, position, offending value).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kdvspec
