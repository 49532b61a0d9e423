#pragma once

#include <stdexcept>
#include <string>

namespace chargraph {

enum class ErrorKind {
  ClosureExceedsCap,
  MalformedPermutation,
  TooManyClasses,
  PrimeDoesNotDivideOrder,
  NotNormal,
  DegreeRecoveryFailure,
  EmptyInput,
  NotDistanceThree,
  NotConnected,
  SolverInconsistency,
  UnknownFixture,
  GraphTooLarge,
  ParseError,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; kind() tells the
// caller (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  // Caps on group order, class count or graph size were exceeded.
  bool is_resource_cap() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace chargraph
