#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcurve {

enum class ErrorKind {
  ParseError,
  NegativeCount,
  InvalidComponent,
  ZeroForm,
  DuplicateComponent,
  SingularConic,
  UnknownComponent,
  TooFewComponents,
  OutOfRange,
  DegreeTooSmall,
  UnsupportedMultiplicity,
  NotFree,
  InvalidArgument,
  NonOrdinarySingularity,
  MultiplicityTooHigh,
  ShearExhausted,
  StabilizationFailure,
  BoundViolated,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code for an error class. The mapping is part of the CLI
/// contract:
///   2  parse errors
///   3  unsupported singularities (non-ordinary, multiplicity >= 5)
///   4  internal inconsistencies (should never happen on valid input)
///   5  semantically invalid input or arguments
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mcurve
