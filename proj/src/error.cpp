#include "quadirr/error.hpp"

namespace quadirr {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::UnsupportedDegreeN: return "UnsupportedDegreeN";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegenerateEvenMap: return "DegenerateEvenMap";
    case ErrorCode::ZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace quadirr
