#include "quadirr/counting.hpp"

#include "quadirr/irreducible.hpp"

namespace quadirr {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (num % den != 0) {
    fail(ErrorCode::NonIntegerResult, std::string(what) + ": " + num.str() + " / " + den.str());
  }
  return num / den;
}

BigInt odd_mobius_power_sum(const BigInt& q, std::uint64_t n) {
  BigInt sum = 0;
  for (auto d : make_divisor_table(n).odd_divisors) {
    const int mu = mobius(d);
    if (mu != 0) sum += mu * big_pow(q, n / d);
  }
  return sum;
}

void require_positive(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be >= 1");
}

void require_order(const BigInt& q, const QuadMap& map) {
  if (q != BigInt(map.field().order())) {
    fail(ErrorCode::SpecMismatch, "q = " + q.str() + " but the map is over " + map.field().describe());
  }
}

BigInt ramified_sum(const BigInt& q, std::uint64_t n, const QuadMap& map) {
  const RamInvariants inv = ramification_invariants(map, static_cast<unsigned>(n));
  BigInt sum = 0;
  for (auto d : make_divisor_table(n).odd_divisors) {
    const int mu = mobius(d);
    if (mu != 0) sum += mu * (big_pow(q, n / d) + inv.combination());
  }
  return sum;
}

}  // namespace

BigInt srim_count(const BigInt& q, std::uint64_t n) {
  require_positive(n);
  const BigInt two_n = BigInt(2) * n;
  if (q % 2 == 1 && is_power_of_two(n)) return exact_div(big_pow(q, n) - 1, two_n, "srim_count");
  return exact_div(odd_mobius_power_sum(q, n), two_n, "srim_count");
}

BigInt transform_count(const BigInt& q, std::uint64_t n, const QuadMap& map) {
  if (n < 2) fail(ErrorCode::UnsupportedDegreeN, "the transform count is stated for n >= 2");
  require_order(q, map);
  if (map.degenerate_even()) return 0;
  const BigInt two_n = BigInt(2) * n;
  if (q % 2 == 1 && is_power_of_two(n)) return exact_div(big_pow(q, n) - 1, two_n, "transform_count");
  return exact_div(odd_mobius_power_sum(q, n), two_n, "transform_count");
}

BigInt irreducible_count(const BigInt& q, std::uint64_t n) {
  require_positive(n);
  BigInt sum = 0;
  for (auto d : make_divisor_table(n).divisors) {
    const int mu = mobius(d);
    if (mu != 0) sum += mu * big_pow(q, n / d);
  }
  return exact_div(sum, BigInt(n), "irreducible_count");
}

int odd_mobius_sum(std::uint64_t n) {
  require_positive(n);
  int sum = 0;
  for (auto d : make_divisor_table(n).odd_divisors) sum += mobius(d);
  return sum;
}

BigInt ubar_count_closed(const BigInt& q, std::uint64_t n, const QuadMap& map) {
  require_positive(n);
  require_order(q, map);
  const RamInvariants inv = ramification_invariants(map, static_cast<unsigned>(n));
  return exact_div(big_pow(q, n) + inv.combination(), BigInt(2), "ubar_count_closed");
}

BigInt u_count_closed(const BigInt& q, std::uint64_t n, const QuadMap& map) {
  require_positive(n);
  require_order(q, map);
  return exact_div(ramified_sum(q, n, map), BigInt(2), "u_count_closed");
}

nlohmann::json CountReport::to_json() const {
  nlohmann::json j;
  j["q"] = q.str();
  j["n"] = std::to_string(n);
  j["map"] = map ? nlohmann::json(*map) : nlohmann::json(nullptr);
  j["formula_count"] = formula_count.str();
  j["oracle_count"] = oracle_count ? nlohmann::json(oracle_count->str()) : nlohmann::json(nullptr);
  if (invariants) {
    j["invariants"] = {{"a", std::to_string(invariants->a)},
                       {"b", std::to_string(invariants->b)},
                       {"c", std::to_string(invariants->c)},
                       {"d", std::to_string(invariants->d)}};
  } else {
    j["invariants"] = nullptr;
  }
  const auto m = match();
  j["match"] = m ? nlohmann::json(*m) : nlohmann::json(nullptr);
  return j;
}

}  // namespace quadirr
