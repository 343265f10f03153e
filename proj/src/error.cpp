#include "vlat/error.hpp"

namespace vlat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::UnsupportedCone: return "UnsupportedCone";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::MalformedProgram: return "MalformedProgram";
    case ErrorCode::NotInRange: return "NotInRange";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ZeroProjection: return "ZeroProjection";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::DiagonalNotConstant: return "DiagonalNotConstant";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NeedTwoBlocks: return "NeedTwoBlocks";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string compose_message(ErrorCode code, const std::string& detail) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += "(" + detail + ")";
  }
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(compose_message(code, detail)),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace vlat
