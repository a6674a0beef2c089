#ifndef UOP_ERROR_HPP
#define UOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace uop {

enum class ErrorCode {
  UnsupportedPrime,
  EmptyInput,
  NonIsolatedRoot,
  PrecisionExhausted,
  IdentityViolation,
  InconsistentExpansion,
  NonExactDivision,
  InvariantViolation,
  NoSignMatches,
  InsufficientQPrec,
  BaseRegionIncomplete,
  IrrationalScale,
  SingularMinor,
  UnstableRange,
  NotCuspidal,
  TruncationMismatch,
  DegeneratePairing,
  CongruenceViolation,
  PrecisionLoss,
  DivisionByZero,
  Usage,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace uop

#endif
