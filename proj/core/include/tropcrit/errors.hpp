#pragma once

#include <stdexcept>
#include <string>

namespace tropcrit {

enum class ErrorCode {
  EmptyBases,
  UnequalCardinality,
  ExchangeAxiomViolated,
  InvalidRank,
  InvalidVertexIndex,
  InvalidElement,
  GroundTooLarge,
  NotABasis,
  GroundMismatch,
  NotATree,
  NotCyclic,
  NotRapidlyIncreasing,
  LoopOrColoopSpecialElement,
  FlagEnumerationTooLarge,
  InternalAssertionFailed,
  AllTrialsDegenerate,
  ParseError,
  IndexOutOfRange,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Internal consistency check; failure indicates a bug, never bad input.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InternalAssertionFailed, what);
}

}  // namespace tropcrit
