#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modrep {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  NoConwayPolynomialStored,
  FieldTooLarge,
  OrderDoesNotDivide,
  ZeroElement,
  IncompatibleFields,
  ContextMismatch,
  DimensionMismatch,
  BoundExceeded,
  SingularGenerator,
  NotASubgroup,
  NotNormal,
  NotAHomomorphism,
  DegreeMismatch,
  DoesNotNormalize,
  GroupMismatch,
  QuotientMismatch,
  InconclusiveAfterBudget,
  NotAbsolutelyIrreducible,
  NotIrreducible,
  SplittingFieldNotFoundInLadder,
  NotSemisimple,
  ClosureStalled,
  OrbitMismatch,
  PaperCheckFailure,
  HypothesisViolation,
  KOutOfRange,
  ROutOfRange,
  TableMismatch,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported as an Error carrying a kind, so
/// callers (and the CLI's exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace modrep
