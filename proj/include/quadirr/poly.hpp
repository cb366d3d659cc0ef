#pragma once

// Dense univariate polynomials over a Field. Coefficients are ascending codes
// with no trailing zeros; the zero polynomial has an empty list and degree
// kNegInfDegree.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadirr/field.hpp"

namespace quadirr {

// std::nullopt is the degree of the zero polynomial and orders below every
// real degree.
using Degree = std::optional<std::size_t>;
inline constexpr std::nullopt_t kNegInfDegree = std::nullopt;

class Poly {
 public:
  explicit Poly(FieldSpec spec);
  Poly(FieldSpec spec, std::vector<Code> coeffs);

  static Poly constant(const FieldSpec& spec, Code c) { return Poly(spec, {c}); }
  static Poly x(const FieldSpec& spec) { return Poly(spec, {0, 1}); }
  // Parses the ascending comma-separated code form, e.g. "1,0,1" = x^2 + 1.
  static Poly parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const noexcept { return spec_; }
  const Field& field() const noexcept { return *spec_; }
  const std::vector<Code>& coeffs() const noexcept { return coeffs_; }

  Degree degree() const noexcept {
    if (coeffs_.empty()) return kNegInfDegree;
    return coeffs_.size() - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Code coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FieldElement coefficient(std::size_t i) const { return {spec_, coeff(i)}; }
  Code lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Poly monic() const;
  Poly scaled(Code c) const;

  // Ascending code form; the zero polynomial prints as "0".
  std::string to_string() const;

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend bool operator==(const Poly& f, const Poly& g);

 private:
  void normalize();

  FieldSpec spec_;
  std::vector<Code> coeffs_;
};

enum class PolyOp { add, sub, mul };

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g);

// f = q*g + r with deg r < deg g. DivisionByZero for g = 0.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);

// Monic gcd. BothZero when f = g = 0.
Poly gcd(const Poly& f, const Poly& g);

// Horner evaluation at x, where x's field equals or extends f's field.
FieldElement eval(const Poly& f, const FieldElement& x);
// Code-level evaluation for hot loops; `at` must contain f's field.
Code eval_code(const Poly& f, const Field& at, Code x);

// f^e mod m. DivisionByZero if m is zero or constant.
Poly powmod(const Poly& f, const BigInt& e, const Poly& m);

// x^deg f * f(1/x). ZeroConstantTerm when f(0) = 0.
Poly reciprocal(const Poly& f);

// Res(f, g) = lc(f)^deg g * prod g(x_i) over the roots x_i of f.
// ZeroPolynomial if either argument is zero.
FieldElement resultant(const Poly& f, const Poly& g);

// Resultant at formal degrees (m, n) >= the actual degrees, i.e. the
// Sylvester determinant with leading zero coefficients. Zero if both leading
// formal coefficients vanish.
FieldElement formal_resultant(const Poly& f, std::size_t m, const Poly& g, std::size_t n);

// b^2 - 4ac of a quadratic. UnsupportedDegree unless deg f = 2.
FieldElement discriminant(const Poly& f);

// Formal b^2 - 4ac of a coefficient triple (a, b, c) regardless of degree.
Code quadratic_discriminant(const Field& field, Code a, Code b, Code c);

Poly derivative(const Poly& f);

// Residue arithmetic in F[x]/(m) for a monic modulus m of degree >= 1.
// Residues are dense vectors of length deg m (trailing zeros allowed).
class ModulusRing {
 public:
  explicit ModulusRing(const Poly& monic_modulus);

  std::size_t degree() const noexcept { return n_; }
  const Field& field() const noexcept { return *spec_; }

  std::vector<Code> reduce(std::span<const Code> a) const;
  std::vector<Code> mul(std::span<const Code> a, std::span<const Code> b) const;
  std::vector<Code> pow(std::span<const Code> a, const BigInt& e) const;
  std::vector<Code> pow(std::span<const Code> a, std::uint64_t e) const;
  Poly to_poly(std::span<const Code> a) const;

 private:
  void reduce_in_place(std::vector<Code>& a) const;

  FieldSpec spec_;
  std::vector<Code> mod_;  // monic, ascending, length n_ + 1
  std::size_t n_;
};

}  // namespace quadirr
