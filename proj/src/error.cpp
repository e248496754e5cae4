#include "evidist/error.hpp"

namespace evidist {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::TooManyElements: return "TooManyElements";
    case ErrorCode::EmptyFrame: return "EmptyFrame";
    case ErrorCode::PositionLengthMismatch: return "PositionLengthMismatch";
    case ErrorCode::NonFinitePosition: return "NonFinitePosition";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::MassOutOfRange: return "MassOutOfRange";
    case ErrorCode::MassSumViolation: return "MassSumViolation";
    case ErrorCode::EmptySetMass: return "EmptySetMass";
    case ErrorCode::DuplicateFocalSet: return "DuplicateFocalSet";
    case ErrorCode::TotalConflict: return "TotalConflict";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::InvalidTuning: return "InvalidTuning";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::CaseOutOfRange: return "CaseOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UnknownBpa: return "UnknownBpa";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace evidist
