#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quadirr/bigint.hpp"
#include "quadirr/field.hpp"
#include "quadirr/poly.hpp"

namespace quadirr {

// Enumeration limits; exceeding one is an OracleCapExceeded error, never a
// silent truncation.
struct OracleCaps {
  std::uint64_t f_space = std::uint64_t{1} << 24;     // Q^deg for polynomial enumerations
  std::uint64_t beta_space = std::uint64_t{1} << 20;  // Q^n for element enumerations
};

// Rabin's test on the monic associate. ConstantPolynomial for deg f < 1.
bool is_irreducible(const Poly& f);

// Trial division by every monic polynomial of degree 1..deg/2.
// OracleCapExceeded when Q^ceil(deg/2) > cap.
bool naive_is_irreducible(const Poly& f, std::uint64_t cap = OracleCaps{}.f_space);

// Number of monic polynomials of the given degree, Q^deg.
BigInt monic_count(const Field& field, unsigned deg);

// The idx-th monic polynomial of degree deg in lexicographic order of
// (c_0, ..., c_{deg-1}) with c_0 most significant.
Poly monic_from_index(const FieldSpec& spec, unsigned deg, std::uint64_t idx);

// Q^deg as a machine integer after checking it against cap.
std::uint64_t checked_monic_count(const Field& field, unsigned deg, std::uint64_t cap);

void for_each_monic(const FieldSpec& spec, unsigned deg, std::uint64_t cap,
                    const std::function<void(const Poly&)>& visit);

std::vector<Poly> enumerate_monic(const FieldSpec& spec, unsigned deg, std::uint64_t cap = OracleCaps{}.f_space);

// enumerate_monic filtered by is_irreducible (naive_is_irreducible if strict).
std::vector<Poly> enumerate_irreducible(const FieldSpec& spec, unsigned deg,
                                        std::uint64_t cap = OracleCaps{}.f_space, bool strict = false);

// Least e >= 1 with beta^(q^e) = beta, q the order of `over`.
// `over` defaults to the immediate base of beta's field.
unsigned element_degree(const FieldElement& beta);
unsigned element_degree(const FieldElement& beta, const Field& over);
unsigned element_degree_code(const Field& field, Code beta, std::uint64_t q);

int mobius(std::uint64_t n);

struct DivisorTable {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> prime_factors;  // with multiplicity, ascending
  std::vector<std::uint64_t> divisors;       // ascending
  std::vector<std::uint64_t> odd_divisors;   // ascending
};

DivisorTable make_divisor_table(std::uint64_t n);

bool is_power_of_two(std::uint64_t n) noexcept;

}  // namespace quadirr
