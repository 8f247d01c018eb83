#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nurad {

enum class ErrorKind {
  NotHermitian,
  DimensionMismatch,
  NotUnitary,
  DependentInput,
  NotCollinear,
  ModulusMismatch,
  EqualEigenvalues,
  DegenerateDiscriminant,
  ZeroOperator,
  NotNormal,
  NotSelfAdjoint,
  NotNormaloid,
  IsUnitary,
  WrongSpectrum,
  ZeroParameter,
  NoFeasibleBeta,
  IsIsometry,
  RadiusOrderViolation,
  InternalInconsistency,
  ParseError,
  BadFormat,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (notably the CLI exit-code mapping) can dispatch on it.
class NuradError : public std::runtime_error {
 public:
  NuradError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nurad
