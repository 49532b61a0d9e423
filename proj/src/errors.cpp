#include "chargraph/errors.hpp"

namespace chargraph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::TooManyClasses: return "TooManyClasses";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::DegreeRecoveryFailure: return "DegreeRecoveryFailure";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotDistanceThree: return "NotDistanceThree";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::SolverInconsistency: return "SolverInconsistency";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool Error::is_resource_cap() const noexcept {
  return kind_ == ErrorKind::ClosureExceedsCap || kind_ == ErrorKind::TooManyClasses ||
         kind_ == ErrorKind::GraphTooLarge;
}

}  // namespace chargraph
