#include "quadirr/quadmap.hpp"

#include "quadirr/irreducible.hpp"

namespace quadirr {

namespace {

void require_odd(const Field& F, const char* what) {
  if (F.characteristic() == 2) fail(ErrorCode::EvenCharacteristic, std::string(what) + " needs odd characteristic");
}

// Distinct roots of A x^2 + B x + C (coefficients in F_q, not all zero) in
// F_{q^n}. For x in F_q*, eta over F_{q^n} is eta_q(x)^n and the absolute
// trace over F_{q^n} is n * Tr_q(x).
int roots_in_extension(const Field& F, unsigned n, Code A, Code B, Code C) {
  if (A == 0) return B == 0 ? 0 : 1;
  if (F.characteristic() == 2) {
    if (B == 0) return 1;
    const Code u = F.div(F.mul(A, C), F.mul(B, B));
    const int tr = (n % 2 == 1) ? absolute_trace(F, u) : 0;
    return tr == 0 ? 2 : 0;
  }
  const Code disc = quadratic_discriminant(F, A, B, C);
  if (disc == 0) return 1;
  const int eta = (n % 2 == 1) ? quadratic_character(F, disc) : 1;
  return eta == 1 ? 2 : 0;
}

}  // namespace

std::string QuadMap::to_string() const { return "g=" + g_.to_string() + ";h=" + h_.to_string(); }

QuadMap validate_map(const Poly& g, const Poly& h) {
  if (!(g.field() == h.field())) fail(ErrorCode::SpecMismatch, "g and h over different fields");
  const Degree top = std::max(g.degree(), h.degree());
  if (top != Degree(2)) {
    fail(ErrorCode::BadDegree, "max(deg g, deg h) must be 2 (g=" + g.to_string() + ", h=" + h.to_string() + ")");
  }
  const Poly common = gcd(g, h);
  if (!common.is_constant()) {
    fail(ErrorCode::NotCoprime, "gcd(g, h) = " + common.to_string());
  }
  const bool degenerate = g.field().characteristic() == 2 && g.coeff(1) == 0 && h.coeff(1) == 0;
  return QuadMap(g, h, degenerate);
}

QuadMap srim_map(const FieldSpec& spec) { return validate_map(Poly(spec, {1, 0, 1}), Poly(spec, {0, 1})); }

Poly transform(const Poly& f, const QuadMap& map) {
  if (!(f.field() == map.field())) fail(ErrorCode::SpecMismatch, "f and map over different fields");
  if (f.is_constant() || !f.is_monic()) fail(ErrorCode::NotMonic, "transform needs monic f of degree >= 1");
  const std::size_t n = *f.degree();
  std::vector<Poly> gpow{Poly::constant(map.spec(), 1)};
  std::vector<Poly> hpow{Poly::constant(map.spec(), 1)};
  for (std::size_t i = 1; i <= n; ++i) {
    gpow.push_back(gpow.back() * map.g());
    hpow.push_back(hpow.back() * map.h());
  }
  Poly p(map.spec());
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    p = p + (gpow[i] * hpow[n - i]).scaled(f.coeff(i));
  }
  return p;
}

bool quadratic_irreducible_code(const Field& F, Code a, Code b, Code c) {
  if (a == 0) fail(ErrorCode::UnsupportedDegree, "quadratic_irreducible needs degree 2");
  if (F.characteristic() == 2) {
    if (b == 0) return false;
    return absolute_trace(F, F.div(F.mul(a, c), F.mul(b, b))) == 1;
  }
  return quadratic_character(F, quadratic_discriminant(F, a, b, c)) == -1;
}

bool quadratic_irreducible(const Poly& r) {
  if (r.degree() != Degree(2)) fail(ErrorCode::UnsupportedDegree, "quadratic_irreducible needs degree 2");
  return quadratic_irreducible_code(r.field(), r.coeff(2), r.coeff(1), r.coeff(0));
}

Poly r_beta(const QuadMap& map, const FieldElement& beta) {
  const Field& E = beta.field();
  if (!E.contains(map.field())) {
    fail(ErrorCode::SpecMismatch, E.describe() + " does not contain " + map.field().describe());
  }
  const Code bt = beta.code();
  return Poly(beta.spec(), {E.sub(map.c1(), E.mul(bt, map.c2())), E.sub(map.b1(), E.mul(bt, map.b2())),
                            E.sub(map.a1(), E.mul(bt, map.a2()))});
}

bool capelli_irreducible(const Poly& f, const QuadMap& map) {
  if (!(f.field() == map.field())) fail(ErrorCode::SpecMismatch, "f and map over different fields");
  if (f.degree() < Degree(2)) fail(ErrorCode::BadDegree, "capelli_irreducible needs deg f >= 2");
  if (!f.is_monic()) fail(ErrorCode::NotMonic, "capelli_irreducible needs monic f");
  if (!is_irreducible(f)) fail(ErrorCode::NotIrreducible, "f = " + f.to_string() + " is reducible");
  // F_{q^n} = F_q[y]/(f); make_extension_with_modulus re-checks irreducibility.
  const FieldSpec ext = make_extension_with_modulus(map.spec(), f.coeffs(), TablePolicy::none, kHardOrderLimit - 1);
  const Field& E = *ext;
  const auto alpha = static_cast<Code>(map.field().order());  // the class of y
  const Code A = E.sub(map.a1(), E.mul(alpha, map.a2()));
  const Code B = E.sub(map.b1(), E.mul(alpha, map.b2()));
  const Code C = E.sub(map.c1(), E.mul(alpha, map.c2()));
  if (A == 0) fail(ErrorCode::InternalInvariantViolation, "r_alpha dropped degree for deg f >= 2");
  return quadratic_irreducible_code(E, A, B, C);
}

std::array<Code, 3> w_coefficients(const QuadMap& map) {
  const Field& F = map.field();
  const Code two = F.from_int(2);
  const Code four = F.from_int(4);
  const Code disc_h = quadratic_discriminant(F, map.a2(), map.b2(), map.c2());
  const Code disc_g = quadratic_discriminant(F, map.a1(), map.b1(), map.c1());
  const Code mid = F.sub(F.add(F.mul(four, F.mul(map.a1(), map.c2())), F.mul(four, F.mul(map.c1(), map.a2()))),
                         F.mul(two, F.mul(map.b1(), map.b2())));
  return {disc_h, mid, disc_g};
}

FieldElement w_beta(const QuadMap& map, const FieldElement& beta) {
  require_odd(map.field(), "w_beta");
  const Field& E = beta.field();
  if (!E.contains(map.field())) fail(ErrorCode::SpecMismatch, "beta not over the map's field");
  const auto w = w_coefficients(map);
  const Code bt = beta.code();
  return {beta.spec(), E.add(E.mul(E.add(E.mul(w[0], bt), w[1]), bt), w[2])};
}

FieldElement map_resultant(const QuadMap& map) {
  const Field& F = map.field();
  const Code t1 = F.sub(F.mul(map.a1(), map.c2()), F.mul(map.a2(), map.c1()));
  const Code t2 = F.sub(F.mul(map.a1(), map.b2()), F.mul(map.a2(), map.b1()));
  const Code t3 = F.sub(F.mul(map.b1(), map.c2()), F.mul(map.b2(), map.c1()));
  return {map.spec(), F.sub(F.mul(t1, t1), F.mul(t2, t3))};
}

bool disc_identity_check(const QuadMap& map) {
  require_odd(map.field(), "disc_identity_check");
  const Field& F = map.field();
  const auto w = w_coefficients(map);
  const Code lhs = quadratic_discriminant(F, w[0], w[1], w[2]);
  const Code res = formal_resultant(map.g(), 2, map.h(), 2).code();
  const Code rhs = F.mul(F.from_int(16), res);
  return lhs == rhs;
}

RamInvariants ramification_invariants(const QuadMap& map, unsigned n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  if (map.degenerate_even()) fail(ErrorCode::DegenerateEvenMap, "b1 = b2 = 0 in characteristic 2");
  const Field& F = map.field();
  RamInvariants inv;
  inv.a = roots_in_extension(F, n, map.a2(), map.b2(), map.c2());

  if (map.a2() != 0) {
    const Code beta0 = F.div(map.a1(), map.a2());
    if (F.sub(map.b1(), F.mul(beta0, map.b2())) == 0) {
      if (F.sub(map.c1(), F.mul(beta0, map.c2())) == 0) {
        fail(ErrorCode::InternalInvariantViolation, "r_beta vanished identically for a coprime map");
      }
      inv.c = 1;
    } else {
      inv.d = 1;
    }
  }

  if (F.characteristic() == 2) {
    if (map.b2() != 0) {
      const Code beta1 = F.div(map.b1(), map.b2());
      inv.b = F.sub(map.a1(), F.mul(beta1, map.a2())) != 0 ? 1 : 0;
    }
    return inv;
  }

  const auto w = w_coefficients(map);
  if (w[0] == 0 && w[1] == 0 && w[2] == 0) {
    fail(ErrorCode::InternalInvariantViolation, "w(beta) vanished identically for a coprime map");
  }
  int roots = roots_in_extension(F, n, w[0], w[1], w[2]);
  if (map.a2() != 0) {
    const Code beta0 = F.div(map.a1(), map.a2());
    if (F.add(F.mul(F.add(F.mul(w[0], beta0), w[1]), beta0), w[2]) == 0) --roots;
  }
  inv.b = roots;
  return inv;
}

int expected_combination(const Field& field) noexcept { return field.characteristic() == 2 ? 0 : -1; }

std::optional<Poly> char2_poly_sqrt(const Poly& p) {
  const Field& F = p.field();
  if (F.characteristic() != 2) fail(ErrorCode::OddCharacteristic, "char2_poly_sqrt needs characteristic 2");
  std::vector<Code> root;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i % 2 == 1) {
      if (p.coeffs()[i] != 0) return std::nullopt;
    } else {
      root.push_back(char2_sqrt(F, p.coeffs()[i]));
    }
  }
  return Poly(p.spec(), std::move(root));
}

}  // namespace quadirr
