#include "hjoints/error.hpp"

namespace hjoints {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorCode::MixedUniformity: return "MixedUniformity";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyColor: return "EmptyColor";
    case ErrorCode::NotCovering: return "NotCovering";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PointNotOnFlat: return "PointNotOnFlat";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::EmptyTupleSet: return "EmptyTupleSet";
    case ErrorCode::RowSumExceedsA: return "RowSumExceedsA";
    case ErrorCode::UniformityMismatch: return "UniformityMismatch";
    case ErrorCode::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::ChartMissing: return "ChartMissing";
    case ErrorCode::InconsistentLedgers: return "InconsistentLedgers";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace hjoints
