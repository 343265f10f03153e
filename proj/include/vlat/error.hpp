#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vlat {

enum class ErrorCode {
  DimensionMismatch,
  SingularBasis,
  NotPositive,
  SpaceMismatch,
  UnsupportedCone,
  BadExponent,
  MalformedProgram,
  NotInRange,
  HypothesisViolated,
  ZeroProjection,
  NotIdempotent,
  PreconditionFailed,
  NotAPermutation,
  GroupTooLarge,
  BadPartition,
  NotContractive,
  DiagonalNotConstant,
  ZeroDiagonal,
  BadFamily,
  CapExceeded,
  NeedTwoBlocks,
  BadAlpha,
  BetaOutOfRange,
  NotAssociative,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a code plus an optional
/// detail tag (for HypothesisViolated / PreconditionFailed this names the
/// failed hypothesis, e.g. "meet" or "idempotent").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace vlat
