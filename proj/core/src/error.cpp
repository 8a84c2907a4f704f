#include "mcurve/error.hpp"

namespace mcurve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::InvalidComponent: return "InvalidComponent";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::DuplicateComponent: return "DuplicateComponent";
    case ErrorKind::SingularConic: return "SingularConic";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::TooFewComponents: return "TooFewComponents";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::UnsupportedMultiplicity: return "UnsupportedMultiplicity";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonOrdinarySingularity: return "NonOrdinarySingularity";
    case ErrorKind::MultiplicityTooHigh: return "MultiplicityTooHigh";
    case ErrorKind::ShearExhausted: return "ShearExhausted";
    case ErrorKind::StabilizationFailure: return "StabilizationFailure";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NegativeCount:
      return 2;
    case ErrorKind::NonOrdinarySingularity:
    case ErrorKind::MultiplicityTooHigh:
    case ErrorKind::UnsupportedMultiplicity:
      return 3;
    case ErrorKind::ShearExhausted:
    case ErrorKind::StabilizationFailure:
    case ErrorKind::BoundViolated:
    case ErrorKind::InternalInconsistency:
      return 4;
    default:
      return 5;
  }
}

}  // namespace mcurve
