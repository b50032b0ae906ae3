#ifndef HECKE_ERROR_HPP
#define HECKE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hecke {

// Numeric values are shared with the C API (hk_status).
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  ParseError = 2,
  ReducibleLayer = 3,
  DegreeOverLimit = 4,
  PrecisionExhausted = 5,
  ClosureTooLarge = 6,
  NotABasis = 7,
  NotTotallyNegative = 8,
  SqrtNotInClosure = 9,
  NotPure = 10,
  FiberMismatch = 11,
  WindowViolated = 12,
  NotACMTypeAfterAction = 13,
  UnitIncompatible = 14,
  EvenPrimeUnsupported = 15,
  PoleAtS = 16,
  OutsideConvergence = 17,
  TailTooLarge = 18,
  DenominatorIndistinguishableFromZero = 19,
  CoefficientOverflow = 20,
  NotSupported = 21,
  Internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hecke

#endif
