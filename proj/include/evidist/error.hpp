#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evidist {

enum class ErrorCode {
  DuplicateLabel,
  TooManyElements,
  EmptyFrame,
  PositionLengthMismatch,
  NonFinitePosition,
  FrameMismatch,
  NoEmbedding,
  EmptySet,
  ElementOutOfRange,
  MassOutOfRange,
  MassSumViolation,
  EmptySetMass,
  DuplicateFocalSet,
  TotalConflict,
  SupportMismatch,
  KindMismatch,
  AlphaOutOfRange,
  InvalidTuning,
  StepOutOfRange,
  CaseOutOfRange,
  SyntaxError,
  UnknownElement,
  UnknownBpa,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every evidist operation; `code()` identifies the
/// failed precondition so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace evidist
