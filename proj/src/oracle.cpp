#include "quadirr/oracle.hpp"

#include "quadirr/parallel.hpp"

namespace quadirr {

namespace {

bool oracle_irreducible(const Poly& f, const OracleOptions& opts) {
  if (f.is_constant()) return false;
  return opts.strict ? naive_is_irreducible(f, opts.caps.f_space) : is_irreducible(f);
}

}  // namespace

BigInt brute_transform_count(const BigInt& q, unsigned n, const QuadMap& map, const OracleOptions& opts) {
  if (q != BigInt(map.field().order())) fail(ErrorCode::SpecMismatch, "q does not match the map's field");
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  const std::uint64_t total = checked_monic_count(map.field(), n, opts.caps.f_space);
  const auto count = sharded_sum<std::uint64_t>(total, opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Poly f = monic_from_index(map.spec(), n, idx);
      if (!oracle_irreducible(f, opts)) continue;
      if (oracle_irreducible(transform(f, map), opts)) ++hits;
    }
    return hits;
  });
  return BigInt(count);
}

std::vector<Poly> brute_srim_list(const FieldSpec& spec, unsigned degree, const OracleOptions& opts) {
  if (degree == 0) fail(ErrorCode::InvalidArgument, "degree must be >= 1");
  std::vector<Poly> out;
  for_each_monic(spec, degree, opts.caps.f_space, [&](const Poly& f) {
    if (f.coeff(0) == 0) return;
    if (!(reciprocal(f) == f)) return;
    if (oracle_irreducible(f, opts)) out.push_back(f);
  });
  return out;
}

BigInt brute_srim_count(const FieldSpec& spec, unsigned degree, const OracleOptions& opts) {
  if (degree == 0) fail(ErrorCode::InvalidArgument, "degree must be >= 1");
  const std::uint64_t total = checked_monic_count(*spec, degree, opts.caps.f_space);
  const auto count = sharded_sum<std::uint64_t>(total, opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Poly f = monic_from_index(spec, degree, idx);
      if (f.coeff(0) == 0) continue;
      if (!(reciprocal(f) == f)) continue;
      if (oracle_irreducible(f, opts)) ++hits;
    }
    return hits;
  });
  return BigInt(count);
}

SetReport brute_sets(const QuadMap& map, unsigned n, const OracleOptions& opts) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  const std::uint64_t q = map.field().order();
  const std::uint64_t total = checked_monic_count(map.field(), n, opts.caps.beta_space);
  const FieldSpec ext = n == 1 ? map.spec() : make_extension(map.spec(), n, opts.caps.beta_space);
  const Field& E = *ext;

  SetReport rep;
  // preimages[beta] = #{gamma : h(gamma) != 0, g(gamma) = beta h(gamma)}
  std::vector<std::uint8_t> preimages(total, 0);
  for (std::uint64_t gi = 0; gi < total; ++gi) {
    const auto gamma = static_cast<Code>(gi);
    const Code hv = eval_code(map.h(), E, gamma);
    if (hv == 0) {
      ++rep.observed.a;
      continue;
    }
    const Code beta = E.div(eval_code(map.g(), E, gamma), hv);
    ++preimages[beta];
    ++rep.counts.w;
  }

  for (std::uint64_t bi = 0; bi < total; ++bi) {
    const auto beta = static_cast<Code>(bi);
    const Code A = E.sub(map.a1(), E.mul(beta, map.a2()));
    const Code B = E.sub(map.b1(), E.mul(beta, map.b2()));
    const Code C = E.sub(map.c1(), E.mul(beta, map.c2()));
    const unsigned hits = preimages[bi];
    if (hits > 0) ++rep.counts.v;
    if (A == 0 && B == 0) {
      if (C == 0) fail(ErrorCode::InternalInvariantViolation, "r_beta = 0 for a coprime map");
      ++rep.observed.c;
      continue;
    }
    if (A == 0) {
      ++rep.observed.d;
      continue;
    }
    if (hits == 1) ++rep.observed.b;
    // A quadratic over a field is irreducible iff it has no root there.
    const bool irreducible = hits == 0;
    if (irreducible != quadratic_irreducible_code(E, A, B, C)) {
      fail(ErrorCode::InternalInvariantViolation, "root count and quadratic_irreducible disagree");
    }
    if (!irreducible) continue;
    ++rep.counts.ubar;
    if (element_degree_code(E, beta, q) == n) ++rep.counts.u;
  }
  return rep;
}

std::vector<std::int8_t> quadratic_character_table(const Field& field) {
  if (field.characteristic() == 2) fail(ErrorCode::EvenCharacteristic, "quadratic character needs odd order");
  std::vector<std::int8_t> eta(field.order(), -1);
  eta[0] = 0;
  for (std::uint64_t x = 1; x < field.order(); ++x) {
    const auto c = static_cast<Code>(x);
    eta[field.mul(c, c)] = 1;
  }
  return eta;
}

long long character_sum(const Poly& f, const Field& ext, const std::vector<std::int8_t>& eta) {
  long long sum = 0;
  for (std::uint64_t x = 0; x < ext.order(); ++x) sum += eta[eval_code(f, ext, static_cast<Code>(x))];
  return sum;
}

bool character_sum_check(const Poly& f, const Field& ext, const std::vector<std::int8_t>& eta) {
  if (ext.characteristic() == 2) fail(ErrorCode::EvenCharacteristic, "character sums need odd characteristic");
  if (f.degree() != Degree(2)) fail(ErrorCode::UnsupportedDegree, "character_sum_check needs a quadratic");
  if (!ext.contains(f.field())) fail(ErrorCode::SpecMismatch, "summation field does not contain f's field");
  if (discriminant(f).is_zero()) fail(ErrorCode::ZeroDiscriminant, "f has a repeated root");
  return character_sum(f, ext, eta) == -eta[f.lead()];
}

bool character_sum_check(const Poly& f, const FieldSpec& ext, const OracleOptions& opts) {
  if (ext->order() > opts.caps.beta_space) fail(ErrorCode::OracleCapExceeded, "summation field exceeds cap");
  return character_sum_check(f, *ext, quadratic_character_table(*ext));
}

}  // namespace quadirr
