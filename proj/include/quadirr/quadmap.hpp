#pragma once

// Quadratic transformations p(x) = h(x)^n f(g(x)/h(x)) for coprime g, h with
// max(deg g, deg h) = 2, writing g = a1 x^2 + b1 x + c1 and h = a2 x^2 + b2 x + c2.

#include <array>
#include <cstdint>
#include <string>

#include "quadirr/field.hpp"
#include "quadirr/poly.hpp"

namespace quadirr {

class QuadMap {
 public:
  const FieldSpec& spec() const noexcept { return g_.spec(); }
  const Field& field() const noexcept { return g_.field(); }
  const Poly& g() const noexcept { return g_; }
  const Poly& h() const noexcept { return h_; }

  Code a1() const noexcept { return g_.coeff(2); }
  Code b1() const noexcept { return g_.coeff(1); }
  Code c1() const noexcept { return g_.coeff(0); }
  Code a2() const noexcept { return h_.coeff(2); }
  Code b2() const noexcept { return h_.coeff(1); }
  Code c2() const noexcept { return h_.coeff(0); }

  // b1 = b2 = 0 in characteristic 2: every transform is a square.
  bool degenerate_even() const noexcept { return degenerate_even_; }

  // "g=<coeffs>;h=<coeffs>" in ascending code form.
  std::string to_string() const;

 private:
  QuadMap(Poly g, Poly h, bool degenerate_even)
      : g_(std::move(g)), h_(std::move(h)), degenerate_even_(degenerate_even) {}

  Poly g_;
  Poly h_;
  bool degenerate_even_;

  friend QuadMap validate_map(const Poly& g, const Poly& h);
};

// NotCoprime if gcd(g, h) is nonconstant (including g = h = 0),
// BadDegree unless max(deg g, deg h) = 2.
QuadMap validate_map(const Poly& g, const Poly& h);

// The self-reciprocal map (x^2 + 1, x).
QuadMap srim_map(const FieldSpec& spec);

// sum_i f_i g^i h^(n-i). NotMonic unless f is monic of degree >= 1.
Poly transform(const Poly& f, const QuadMap& map);

// Decides irreducibility of a quadratic: odd characteristic by the quadratic
// character of the discriminant, characteristic 2 by b != 0 and
// Tr(ac / b^2) = 1. UnsupportedDegree unless deg r = 2.
bool quadratic_irreducible(const Poly& r);
bool quadratic_irreducible_code(const Field& field, Code a, Code b, Code c);

// g - beta h over beta's field (which must contain the map's field).
Poly r_beta(const QuadMap& map, const FieldElement& beta);

// Irreducibility of transform(f, map) decided in F_q[y]/(f) at the root y.
// NotIrreducible for reducible f; BadDegree for deg f < 2.
bool capelli_irreducible(const Poly& f, const QuadMap& map);

// Coefficients (Disc(h), 4 a1 c2 + 4 c1 a2 - 2 b1 b2, Disc(g)) of
// w(beta) = Disc_x(g - beta h), in the map's field.
std::array<Code, 3> w_coefficients(const QuadMap& map);

// w(beta). EvenCharacteristic in characteristic 2.
FieldElement w_beta(const QuadMap& map, const FieldElement& beta);

// Res(g, h) with both taken at formal degree 2.
FieldElement map_resultant(const QuadMap& map);

// Disc_beta(w) == 16 Res(g, h), resultant at formal degree (2, 2).
// EvenCharacteristic in characteristic 2.
bool disc_identity_check(const QuadMap& map);

struct RamInvariants {
  int a = 0;  // roots of h in F_{q^n}
  int b = 0;  // beta with quadratic r_beta and exactly one preimage
  int c = 0;  // beta with constant r_beta
  int d = 0;  // beta with linear r_beta

  int combination() const noexcept { return a - b - 2 * c - d; }
  friend bool operator==(const RamInvariants&, const RamInvariants&) = default;
};

// (a, b, c, d) over F_{q^n}, computed from the coefficients alone.
// DegenerateEvenMap for degenerate characteristic-2 maps.
RamInvariants ramification_invariants(const QuadMap& map, unsigned n);

// The value a - b - 2c - d takes for n = 2^m, m >= 1: -1 in odd and 0 in even
// characteristic.
int expected_combination(const Field& field) noexcept;

// Square root of a polynomial in characteristic 2 when every odd-degree
// coefficient vanishes; std::nullopt otherwise.
std::optional<Poly> char2_poly_sqrt(const Poly& p);

}  // namespace quadirr
