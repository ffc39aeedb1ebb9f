#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphiso {

enum class ErrorCode {
  NonPositiveWeight,
  DanglingEndpoint,
  DuplicateEdgeId,
  DuplicateVertexId,
  NonPositiveScale,
  UnknownEdge,
  UnknownVertex,
  BadPartCount,
  InfeasibleParameters,
  NotConnected,
  NoCycle,
  NoCycleThroughEdge,
  OracleBudgetExceeded,
  NonSquare,
  NegativeEntry,
  NoConvergence,
  FrontierBudgetExceeded,
  NotACycle,
  SizeLimitExceeded,
  ZeroBetti,
  DegenerateBox,
  EmptySubshift,
  NonPositiveBetti,
  BadParameter,
  OutOfDomain,
  IterationBudgetExceeded,
  Unbounded,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every failure the library reports. The code
/// identifies the failure class; the message carries the specifics.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace graphiso
