#include "quadirr/counting.hpp"
#include "quadirr/grid.hpp"
#include "quadirr/oracle.hpp"
#include "support.hpp"

using namespace quadirr;
using namespace quadirr::test;

namespace {

// Direct sum of eta(f(c)) with eta from Euler's criterion.
long long euler_sum(const Poly& f) {
  const Field& K = f.field();
  long long s = 0;
  for (Code c = 0; c < K.order(); ++c) s += quadratic_character(K, eval_code(f, K, c));
  return s;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("brute_transform_count examples") {
    CHECK(brute_transform_count(2, 3, srim_map(F(2))) == 1);
    CHECK(brute_transform_count(3, 2, srim_map(F(3))) == 2);
    const auto f4 = F(4);
    CHECK(brute_transform_count(4, 2, validate_map(P(f4, "1,0,1"), P(f4, "2,0,1"))) == 0);
    OracleOptions tight;
    tight.caps.f_space = 100;
    CHECK(error_of([&] { brute_transform_count(2, 7, srim_map(F(2)), tight); }) == ErrorCode::OracleCapExceeded);
  }

  TEST_CASE("strict oracle agrees") {
    OracleOptions strict;
    strict.strict = true;
    for (std::uint64_t q : {2, 3, 4}) {
      for (unsigned n = 2; n <= 4; ++n) {
        CHECK(brute_transform_count(q, n, srim_map(F(q)), strict) == brute_transform_count(q, n, srim_map(F(q))));
      }
    }
  }

  TEST_CASE("sharded counts do not depend on the worker count") {
    OracleOptions one, four;
    four.workers = 4;
    const auto spec = F(3);
    const QuadMap m = validate_map(P(spec, "2,1,1"), P(spec, "1,0,2"));
    CHECK(brute_transform_count(3, 6, m, one) == brute_transform_count(3, 6, m, four));
    CHECK(brute_srim_count(spec, 8, one) == brute_srim_count(spec, 8, four));
  }

  TEST_CASE("brute_srim examples") {
    CHECK(brute_srim_count(F(2), 6) == 1);
    CHECK(brute_srim_list(F(2), 6) == std::vector<Poly>{P(F(2), "1,0,0,1,0,0,1")});
    CHECK(brute_srim_count(F(3), 4) == 2);
    CHECK(brute_srim_count(F(2), 2) == 1);
    CHECK(brute_srim_list(F(2), 4) == std::vector<Poly>{P(F(2), "1,1,1,1,1")});
  }

  TEST_CASE("brute_sets examples") {
    const auto r31 = brute_sets(srim_map(F(3)), 1);
    CHECK(r31.counts.w == 2);
    CHECK(r31.counts.ubar == 1);
    CHECK(BigInt(r31.counts.ubar) == ubar_count_closed(3, 1, srim_map(F(3))));
    const auto r32 = brute_sets(srim_map(F(3)), 2);
    CHECK(r32.counts.ubar == 4);
    CHECK(r32.counts.u == 4);
    const auto f2 = F(2);
    CHECK(brute_sets(validate_map(P(f2, "0,0,1"), P(f2, "1,1")), 2).counts.ubar == 2);
    OracleOptions tight;
    tight.caps.beta_space = 64;
    CHECK(error_of([&] { brute_sets(srim_map(F(3)), 4, tight); }) == ErrorCode::OracleCapExceeded);
  }

  TEST_CASE("set identities and closed forms") {
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
      const auto spec = F(q);
      const auto maps = random_maps(spec, 4, 99);
      for (unsigned n = 1; n <= 6; ++n) {
        if (monic_count(*spec, n) > 4096) break;
        for (const auto& m : maps) {
          const SetReport rep = brute_sets(m, n);
          const auto& s = rep.counts;
          const auto& inv = rep.observed;
          const BigInt qn = big_pow(BigInt(q), n);
          REQUIRE(BigInt(s.w) == qn - inv.a);
          REQUIRE(BigInt(s.v) == qn - inv.c - s.ubar);
          REQUIRE(2 * s.v == s.w + inv.b + inv.d);
          REQUIRE(BigInt(s.ubar) == ubar_count_closed(q, n, m));
          REQUIRE(BigInt(s.u) == u_count_closed(q, n, m));
          std::uint64_t sum = 0;
          for (auto d : make_divisor_table(n).odd_divisors) sum += brute_sets(m, n / d).counts.u;
          REQUIRE(s.ubar == sum);
          if (n >= 2) REQUIRE(BigInt(s.u) == brute_transform_count(q, n, m) * n);
        }
      }
    }
  }

  TEST_CASE("character sum examples") {
    CHECK(character_sum_check(P(F(3), "1,0,1"), F(3)));
    CHECK(euler_sum(P(F(3), "1,0,1")) == -1);
    CHECK(character_sum_check(P(F(5), "0,1,1"), F(5)));
    CHECK(euler_sum(P(F(5), "0,1,1")) == -1);
    CHECK(character_sum_check(P(F(5), "1,0,2"), F(5)));
    CHECK(euler_sum(P(F(5), "1,0,2")) == 1);
    CHECK(error_of([] { character_sum_check(P(F(5), "1,2,1"), F(5)); }) == ErrorCode::ZeroDiscriminant);
    CHECK(error_of([] { character_sum_check(P(F(4), "1,1,1"), F(4)); }) == ErrorCode::EvenCharacteristic);
    CHECK(error_of([] { character_sum_check(P(F(5), "1,1"), F(5)); }) == ErrorCode::UnsupportedDegree);
    OracleOptions tight;
    tight.caps.beta_space = 10;
    CHECK(error_of([&] { character_sum_check(P(F(5), "1,0,2"), F(25), tight); }) == ErrorCode::OracleCapExceeded);
  }

  TEST_CASE("character table matches Euler's criterion") {
    for (std::uint64_t q : {3, 9, 25, 27, 49, 81}) {
      const auto spec = F(q);
      const Field& K = *spec;
      const auto eta = quadratic_character_table(K);
      for (Code x = 0; x < q; ++x) REQUIRE(eta[x] == quadratic_character(K, x));
    }
  }

  TEST_CASE("character sums over a larger field") {
    // f over F_3, summed over F_9.
    const auto f3 = F(3);
    const auto f9 = make_extension(f3, 2);
    CHECK(character_sum_check(P(f3, "1,0,1"), f9));
    CHECK(character_sum_check(P(f3, "2,1,1"), f9));
  }
}
