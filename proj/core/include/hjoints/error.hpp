#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hjoints {

enum class ErrorCode {
  InvalidArgument,
  InvalidHypergraph,
  MixedUniformity,
  DuplicateEdge,
  EmptyColor,
  NotCovering,
  IsolatedVertex,
  DimensionMismatch,
  PointNotOnFlat,
  CapExceeded,
  BudgetExceeded,
  FieldTooSmall,
  SizeMismatch,
  GenericityFailure,
  NegativeValue,
  EmptyTupleSet,
  RowSumExceedsA,
  UniformityMismatch,
  WorkLimitExceeded,
  DegreeOverflow,
  ChartMissing,
  InconsistentLedgers,
  NotConnected,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures surface as this exception; code() identifies the
// error kind named in the public contracts.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hjoints
