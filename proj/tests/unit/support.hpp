#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "quadirr/error.hpp"
#include "quadirr/field.hpp"
#include "quadirr/poly.hpp"

namespace quadirr::test {

inline FieldSpec F(std::uint64_t q) { return make_field(q); }

inline Poly P(const FieldSpec& spec, const std::string& text) { return Poly::parse(spec, text); }

inline FieldElement E(const FieldSpec& spec, Code c) { return {spec, c}; }

// Runs fn and returns the ErrorCode it throws; fails the test if nothing is thrown.
template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected quadirr::Error");
  return ErrorCode::InternalInvariantViolation;
}

}  // namespace quadirr::test
