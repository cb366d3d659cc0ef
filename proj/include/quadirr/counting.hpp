#pragma once

// Closed-form counts of irreducible polynomials and of irreducible images
// under a quadratic map.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "quadirr/bigint.hpp"
#include "quadirr/quadmap.hpp"

namespace quadirr {

// Self-reciprocal irreducible monic polynomials of degree 2n over F_q:
// (q^n - 1)/(2n) for q odd and n a power of two (n = 1 included), otherwise
// (1/(2n)) sum_{d | n, d odd} mu(d) q^(n/d).
BigInt srim_count(const BigInt& q, std::uint64_t n);

// Monic irreducible f of degree n >= 2 with irreducible transform(f, map).
// UnsupportedDegreeN for n < 2; SpecMismatch if q is not the map's field order.
BigInt transform_count(const BigInt& q, std::uint64_t n, const QuadMap& map);

// (1/n) sum_{d | n} mu(d) q^(n/d).
BigInt irreducible_count(const BigInt& q, std::uint64_t n);

// sum_{d | n, d odd} mu(d).
int odd_mobius_sum(std::uint64_t n);

// #{beta in F_{q^n} : r_beta irreducible quadratic} = (q^n + a - b - 2c - d) / 2.
BigInt ubar_count_closed(const BigInt& q, std::uint64_t n, const QuadMap& map);

// #{beta of degree exactly n : r_beta irreducible quadratic}
//   = (1/2) sum_{d | n, d odd} mu(d) (q^(n/d) + a - b - 2c - d).
BigInt u_count_closed(const BigInt& q, std::uint64_t n, const QuadMap& map);

struct CountReport {
  BigInt q;
  std::uint64_t n = 0;
  std::optional<std::string> map;
  BigInt formula_count;
  std::optional<BigInt> oracle_count;
  std::optional<RamInvariants> invariants;

  std::optional<bool> match() const {
    if (!oracle_count) return std::nullopt;
    return *oracle_count == formula_count;
  }

  // Keys sorted, integers as decimal strings, absent values as null.
  nlohmann::json to_json() const;
};

}  // namespace quadirr
