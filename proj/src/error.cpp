#include "graphiso/error.hpp"

namespace graphiso {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BadPartCount: return "BadPartCount";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::NoCycleThroughEdge: return "NoCycleThroughEdge";
    case ErrorCode::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::FrontierBudgetExceeded: return "FrontierBudgetExceeded";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::ZeroBetti: return "ZeroBetti";
    case ErrorCode::DegenerateBox: return "DegenerateBox";
    case ErrorCode::EmptySubshift: return "EmptySubshift";
    case ErrorCode::NonPositiveBetti: return "NonPositiveBetti";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace graphiso
