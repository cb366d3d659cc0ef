#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadirr {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  DivisionByZero,
  SpecMismatch,
  EvenCharacteristic,
  OddCharacteristic,
  ZeroConstantTerm,
  ZeroPolynomial,
  BothZero,
  UnsupportedDegree,
  UnsupportedDegreeN,
  ConstantPolynomial,
  OracleCapExceeded,
  NotCoprime,
  BadDegree,
  NotIrreducible,
  NotMonic,
  DegenerateEvenMap,
  ZeroDiscriminant,
  NonIntegerResult,
  InternalInvariantViolation,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace quadirr
