#include "hecke/error.hpp"

namespace hecke {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ReducibleLayer: return "ReducibleLayer";
    case ErrorCode::DegreeOverLimit: return "DegreeOverLimit";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::NotTotallyNegative: return "NotTotallyNegative";
    case ErrorCode::SqrtNotInClosure: return "SqrtNotInClosure";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::FiberMismatch: return "FiberMismatch";
    case ErrorCode::WindowViolated: return "WindowViolated";
    case ErrorCode::NotACMTypeAfterAction: return "NotACMTypeAfterAction";
    case ErrorCode::UnitIncompatible: return "UnitIncompatible";
    case ErrorCode::EvenPrimeUnsupported: return "EvenPrimeUnsupported";
    case ErrorCode::PoleAtS: return "PoleAtS";
    case ErrorCode::OutsideConvergence: return "OutsideConvergence";
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::DenominatorIndistinguishableFromZero: return "DenominatorIndistinguishableFromZero";
    case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hecke
