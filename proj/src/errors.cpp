#include "sgc/errors.hpp"

namespace sgc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonTangent: return "NonTangent";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::OutOfBall: return "OutOfBall";
    case ErrorCode::CutLocus: return "CutLocus";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::GradientFailure: return "GradientFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MaxIterations: return "MaxIterations";
  }
  return "Unknown";
}

bool Error::is_numerical() const noexcept {
  switch (code_) {
    case ErrorCode::StepTooLarge:
    case ErrorCode::OutOfBall:
    case ErrorCode::CutLocus:
    case ErrorCode::GradientFailure:
    case ErrorCode::MaxIterations:
      return true;
    default:
      return false;
  }
}

}  // namespace sgc
