#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polypi {

enum class ErrorCode {
  DivByZeroInterval,
  NegativeSqrt,
  UnsupportedSeed,
  InvalidChord,
  InvalidEdge,
  IterationCapExceeded,
  AntipodalTangents,
  BisectionStall,
  PreconditionViolation,
  DomainViolation,
  NonCoprime,
  ChordTooLong,
  ClosureFailure,
  HypothesisUnordered,
  FractionOutOfRange,
  ThetaOutOfRange,
  InvalidCircuit,
  InconclusivePrecision,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and tests) can dispatch on the kind instead of the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polypi
