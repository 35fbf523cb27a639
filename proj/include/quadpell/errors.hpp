#pragma once

#include <stdexcept>
#include <string>

namespace quadpell {

enum class ErrorKind {
  InvalidArgument,
  NotSquareFree,
  MismatchedField,
  ZeroNormDivisor,
  NotStrictlyPrimitive,
  NotSquareNorm,
  NoStrictSolution,
  NoIntegralNegativePell,
  ParityViolation,
  SpectrumNotCovering,
  TrivialPair,
  NoRationalBisector,
};

const char* to_string(ErrorKind kind);

// Raised for inputs outside a function's domain.
class DomainError : public std::domain_error {
 public:
  DomainError(ErrorKind kind, const std::string& message)
      : std::domain_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a state that the mathematics rules out is reached.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quadpell
