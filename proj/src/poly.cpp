#include "quadirr/poly.hpp"

#include <algorithm>

namespace quadirr {

namespace {

void require_same(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) {
    fail(ErrorCode::SpecMismatch, f.field().describe() + " vs " + g.field().describe());
  }
}

void trim_zeros(std::vector<Code>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a by monic-normalised b in place; returns quotient if wanted.
void rem_in_place(const Field& F, std::vector<Code>& a, const std::vector<Code>& b, std::vector<Code>* quot) {
  const std::size_t n = b.size() - 1;
  const Code inv_lead = F.inv(b.back());
  if (quot != nullptr) quot->assign(a.size() >= b.size() ? a.size() - n : 0, 0);
  for (std::size_t k = a.size(); k-- > n;) {
    const Code t = F.mul(a[k], inv_lead);
    if (t == 0) continue;
    if (quot != nullptr) (*quot)[k - n] = t;
    for (std::size_t j = 0; j <= n; ++j) {
      a[k - n + j] = F.sub(a[k - n + j], F.mul(t, b[j]));
    }
  }
  trim_zeros(a);
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text[i] == '[') {
      ++depth;
    } else if (text[i] == ']') {
      --depth;
    }
  }
  return parts;
}

}  // namespace

Poly::Poly(FieldSpec spec) : spec_(std::move(spec)) {
  if (!spec_) fail(ErrorCode::InvalidArgument, "null field");
}

Poly::Poly(FieldSpec spec, std::vector<Code> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (!spec_) fail(ErrorCode::InvalidArgument, "null field");
  for (Code c : coeffs_) {
    if (!spec_->is_valid(c)) fail(ErrorCode::InvalidArgument, "coefficient code out of range");
  }
  normalize();
}

void Poly::normalize() { trim_zeros(coeffs_); }

Poly Poly::parse(const FieldSpec& spec, std::string_view text) {
  std::vector<Code> coeffs;
  for (auto part : split_top_level(text)) coeffs.push_back(spec->parse_element(part));
  return Poly(spec, std::move(coeffs));
}

Poly Poly::monic() const {
  if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "monic() of zero polynomial");
  return scaled(spec_->inv(lead()));
}

Poly Poly::scaled(Code c) const {
  std::vector<Code> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = spec_->mul(coeffs_[i], c);
  return Poly(spec_, std::move(out));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

Poly operator+(const Poly& f, const Poly& g) {
  require_same(f, g);
  const Field& F = f.field();
  std::vector<Code> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(f.coeff(i), g.coeff(i));
  return Poly(f.spec_, std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) {
  require_same(f, g);
  const Field& F = f.field();
  std::vector<Code> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(f.coeff(i), g.coeff(i));
  return Poly(f.spec_, std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(f.spec_);
  const Field& F = f.field();
  std::vector<Code> out(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    const Code a = f.coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a, g.coeffs_[j]));
    }
  }
  return Poly(f.spec_, std::move(out));
}

bool operator==(const Poly& f, const Poly& g) { return f.coeffs_ == g.coeffs_ && f.field() == g.field(); }

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::sub: return f - g;
    case PolyOp::mul: return f * g;
  }
  fail(ErrorCode::InvalidArgument, "unknown polynomial op");
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Code> r = f.coeffs();
  std::vector<Code> q;
  rem_in_place(f.field(), r, g.coeffs(), &q);
  return {Poly(f.spec(), std::move(q)), Poly(f.spec(), std::move(r))};
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0)");
  const Field& F = f.field();
  std::vector<Code> a = f.coeffs();
  std::vector<Code> b = g.coeffs();
  while (!b.empty()) {
    rem_in_place(F, a, b, nullptr);
    std::swap(a, b);
  }
  return Poly(f.spec(), std::move(a)).monic();
}

Code eval_code(const Poly& f, const Field& at, Code x) {
  Code acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = at.add(at.mul(acc, x), c[i]);
  return acc;
}

FieldElement eval(const Poly& f, const FieldElement& x) {
  if (!x.field().contains(f.field())) {
    fail(ErrorCode::SpecMismatch, x.field().describe() + " does not contain " + f.field().describe());
  }
  return {x.spec(), eval_code(f, x.field(), x.code())};
}

Poly powmod(const Poly& f, const BigInt& e, const Poly& m) {
  require_same(f, m);
  if (m.is_constant()) fail(ErrorCode::DivisionByZero, "powmod needs a modulus of degree >= 1");
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  ModulusRing ring(m.monic());
  auto base = ring.reduce(f.coeffs());
  return ring.to_poly(ring.pow(base, e));
}

Poly reciprocal(const Poly& f) {
  if (f.coeff(0) == 0) fail(ErrorCode::ZeroConstantTerm, "reciprocal needs f(0) != 0");
  std::vector<Code> c = f.coeffs();
  std::reverse(c.begin(), c.end());
  return Poly(f.spec(), std::move(c));
}

FieldElement resultant(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (f.is_zero() || g.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant with zero polynomial");
  const Field& F = f.field();
  std::vector<Code> a = f.coeffs();
  std::vector<Code> b = g.coeffs();
  Code result = 1;
  for (;;) {
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    if (n == 0) return {f.spec(), F.mul(result, F.pow(b[0], m))};
    if (m == 0) return {f.spec(), F.mul(result, F.pow(a[0], n))};
    // Res(a,b) = (-1)^(mn) Res(b,a) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r).
    const Code lc_b = b.back();
    rem_in_place(F, a, b, nullptr);
    if (a.empty()) return {f.spec(), 0};
    const std::size_t k = a.size() - 1;
    if ((m * n) % 2 == 1) result = F.neg(result);
    result = F.mul(result, F.pow(lc_b, m - k));
    std::swap(a, b);
  }
}

FieldElement formal_resultant(const Poly& f, std::size_t m, const Poly& g, std::size_t n) {
  require_same(f, g);
  const Field& F = f.field();
  if (f.degree() > Degree(m) || g.degree() > Degree(n)) {
    fail(ErrorCode::InvalidArgument, "formal degree below actual degree");
  }
  if (f.is_zero()) return {f.spec(), n == 0 ? F.pow(g.coeff(0), m) : Code{0}};
  if (g.is_zero()) return {f.spec(), m == 0 ? F.pow(f.coeff(0), n) : Code{0}};
  const std::size_t df = *f.degree();
  const std::size_t dg = *g.degree();
  if (df < m && dg < n) return {f.spec(), 0};
  const Code true_res = resultant(f, g).code();
  if (dg < n) {
    // Expanding the Sylvester matrix along a column with only lc(f) in it.
    return {f.spec(), F.mul(F.pow(f.lead(), n - dg), true_res)};
  }
  if (df < m) {
    Code r = F.mul(F.pow(g.lead(), m - df), true_res);
    if ((n * (m - df)) % 2 == 1) r = F.neg(r);
    return {f.spec(), r};
  }
  return {f.spec(), true_res};
}

Code quadratic_discriminant(const Field& F, Code a, Code b, Code c) {
  const Code four = F.from_int(4);
  return F.sub(F.mul(b, b), F.mul(four, F.mul(a, c)));
}

FieldElement discriminant(const Poly& f) {
  if (f.degree() != Degree(2)) fail(ErrorCode::UnsupportedDegree, "discriminant implemented for quadratics only");
  return {f.spec(), quadratic_discriminant(f.field(), f.coeff(2), f.coeff(1), f.coeff(0))};
}

Poly derivative(const Poly& f) {
  const Field& F = f.field();
  std::vector<Code> out;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    out.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i % F.characteristic())), f.coeffs()[i]));
  }
  return Poly(f.spec(), std::move(out));
}

// ---------------------------------------------------------------------------

ModulusRing::ModulusRing(const Poly& monic_modulus)
    : spec_(monic_modulus.spec()), mod_(monic_modulus.coeffs()), n_(0) {
  if (monic_modulus.is_constant()) fail(ErrorCode::DivisionByZero, "modulus must have degree >= 1");
  if (!monic_modulus.is_monic()) fail(ErrorCode::NotMonic, "ModulusRing needs a monic modulus");
  n_ = mod_.size() - 1;
}

void ModulusRing::reduce_in_place(std::vector<Code>& a) const {
  const Field& F = *spec_;
  for (std::size_t k = a.size(); k-- > n_;) {
    const Code t = a[k];
    if (t == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) a[k - n_ + j] = F.sub(a[k - n_ + j], F.mul(t, mod_[j]));
  }
  a.resize(n_, 0);
}

std::vector<Code> ModulusRing::reduce(std::span<const Code> a) const {
  std::vector<Code> out(a.begin(), a.end());
  reduce_in_place(out);
  return out;
}

std::vector<Code> ModulusRing::mul(std::span<const Code> a, std::span<const Code> b) const {
  const Field& F = *spec_;
  std::vector<Code> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  reduce_in_place(out);
  return out;
}

std::vector<Code> ModulusRing::pow(std::span<const Code> a, std::uint64_t e) const {
  std::vector<Code> result(n_, 0);
  result[0] = 1;
  if (n_ == 0) return result;
  std::vector<Code> b(a.begin(), a.end());
  reduce_in_place(b);
  while (e != 0) {
    if (e & 1U) result = mul(result, b);
    e >>= 1U;
    if (e != 0) b = mul(b, b);
  }
  return result;
}

std::vector<Code> ModulusRing::pow(std::span<const Code> a, const BigInt& e) const {
  std::vector<Code> result(n_, 0);
  result[0] = 1;
  if (e <= 0) return result;
  std::vector<Code> b(a.begin(), a.end());
  reduce_in_place(b);
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = mul(result, b);
  }
  return result;
}

Poly ModulusRing::to_poly(std::span<const Code> a) const {
  return Poly(spec_, std::vector<Code>(a.begin(), a.end()));
}

}  // namespace quadirr
