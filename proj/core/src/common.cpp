#include "lrbt/common.hpp"

#include <cstdio>

namespace lrbt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularE: return "SingularE";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::MissingSample: return "MissingSample";
    case ErrorCode::MissingDerivative: return "MissingDerivative";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::MissingHermiteData: return "MissingHermiteData";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonNegativeRealPart: return "NonNegativeRealPart";
    case ErrorCode::RepeatedShift: return "RepeatedShift";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::EigFailure: return "EigFailure";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::UnstablePencil: return "UnstablePencil";
    case ErrorCode::SolveFailure: return "SolveFailure";
    case ErrorCode::PoleOnAxis: return "PoleOnAxis";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::IllConditionedPick: return "IllConditionedPick";
    case ErrorCode::RankDeficient: return "RankDeficient";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PoleHit:
    case ErrorCode::EigFailure:
    case ErrorCode::GenerationFailure:
    case ErrorCode::UnstablePencil:
    case ErrorCode::SolveFailure:
    case ErrorCode::PoleOnAxis:
    case ErrorCode::NotPSD:
    case ErrorCode::IllConditionedPick:
    case ErrorCode::RankDeficient:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace lrbt
