#include "tropcrit/errors.hpp"

namespace tropcrit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyBases: return "EmptyBases";
    case ErrorCode::UnequalCardinality: return "UnequalCardinality";
    case ErrorCode::ExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidVertexIndex: return "InvalidVertexIndex";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotRapidlyIncreasing: return "NotRapidlyIncreasing";
    case ErrorCode::LoopOrColoopSpecialElement: return "LoopOrColoopSpecialElement";
    case ErrorCode::FlagEnumerationTooLarge: return "FlagEnumerationTooLarge";
    case ErrorCode::InternalAssertionFailed: return "InternalAssertionFailed";
    case ErrorCode::AllTrialsDegenerate: return "AllTrialsDegenerate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "UnknownError";
}

}  // namespace tropcrit
