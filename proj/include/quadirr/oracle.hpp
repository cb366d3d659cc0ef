#pragma once

// Brute-force counterparts of the closed forms. Everything here enumerates
// literally and never calls the counting module.

#include <cstdint>
#include <vector>

#include "quadirr/bigint.hpp"
#include "quadirr/irreducible.hpp"
#include "quadirr/quadmap.hpp"

namespace quadirr {

struct OracleOptions {
  OracleCaps caps;
  bool strict = false;  // naive trial division instead of Rabin
  unsigned workers = 1;
};

// #{monic irreducible f of degree n : transform(f, map) irreducible}.
BigInt brute_transform_count(const BigInt& q, unsigned n, const QuadMap& map, const OracleOptions& opts = {});

// #{monic f of degree `degree` : f(0) != 0, f* = f, f irreducible}.
BigInt brute_srim_count(const FieldSpec& spec, unsigned degree, const OracleOptions& opts = {});
std::vector<Poly> brute_srim_list(const FieldSpec& spec, unsigned degree, const OracleOptions& opts = {});

struct SetCounts {
  std::uint64_t u = 0;     // beta of degree n with r_beta irreducible quadratic
  std::uint64_t ubar = 0;  // beta in F_{q^n} with r_beta irreducible quadratic
  std::uint64_t v = 0;     // beta with some gamma: g(gamma) = beta h(gamma)
  std::uint64_t w = 0;     // pairs (gamma, beta) with g(gamma) = beta h(gamma)
};

struct SetReport {
  SetCounts counts;
  RamInvariants observed;  // classified beta by beta
};

// Enumerates beta, gamma over F_{q^n} (lex-least tower). Works for degenerate
// maps as well. OracleCapExceeded when q^n > caps.beta_space.
SetReport brute_sets(const QuadMap& map, unsigned n, const OracleOptions& opts = {});

// eta(x) indexed by code, built by squaring every element of the field.
std::vector<std::int8_t> quadratic_character_table(const Field& field);

// sum_{c in ext} eta(f(c)) for f over a subfield of ext.
long long character_sum(const Poly& f, const Field& ext, const std::vector<std::int8_t>& eta);

// character_sum(f, ext) == -eta_ext(lead f). ZeroDiscriminant, EvenCharacteristic,
// UnsupportedDegree, OracleCapExceeded.
bool character_sum_check(const Poly& f, const FieldSpec& ext, const OracleOptions& opts = {});
bool character_sum_check(const Poly& f, const Field& ext, const std::vector<std::int8_t>& eta);

}  // namespace quadirr
