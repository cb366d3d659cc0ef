#include "quadirr/field.hpp"

#include <algorithm>
#include <charconv>

#include "quadirr/irreducible.hpp"
#include "quadirr/poly.hpp"

namespace quadirr {

namespace {

constexpr std::uint64_t kFullTableLimit = 256;
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::ParseError, "not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(PrivateTag, std::uint32_t p) : kind_(Kind::prime), p_(p), order_(p) {
  build_tables(TablePolicy::automatic);
}

Field::Field(PrivateTag, FieldSpec base, std::vector<Code> modulus, TablePolicy tables)
    : kind_(Kind::extension),
      p_(base->characteristic()),
      degree_(static_cast<unsigned>(modulus.size() - 1)),
      abs_degree_(base->absolute_degree() * static_cast<unsigned>(modulus.size() - 1)),
      base_(std::move(base)),
      modulus_(std::move(modulus)) {
  order_ = 1;
  for (unsigned i = 0; i < degree_; ++i) order_ *= base_->order();
  build_tables(tables);
}

const Field& Field::prime_field() const noexcept {
  const Field* f = this;
  while (!f->is_prime()) f = f->base_.get();
  return *f;
}

bool Field::contains(const Field& sub) const noexcept {
  for (const Field* f = this; f != nullptr; f = f->base_.get()) {
    if (*f == sub) return true;
  }
  return false;
}

bool Field::operator==(const Field& other) const noexcept {
  if (this == &other) return true;
  if (kind_ != other.kind_ || p_ != other.p_ || order_ != other.order_) return false;
  if (kind_ == Kind::prime) return true;
  return modulus_ == other.modulus_ && *base_ == *other.base_;
}

Code Field::digit_add(Code a, Code b, bool subtract) const noexcept {
  Code result = 0;
  Code place = 1;
  while (a != 0 || b != 0) {
    const Code da = a % p_;
    const Code db = b % p_;
    a /= p_;
    b /= p_;
    const Code d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    result += d * place;
    place *= p_;
  }
  return result;
}

Code Field::tower_mul(Code a, Code b) const noexcept {
  const Field& base = *base_;
  const auto q = static_cast<Code>(base.order());
  const unsigned m = degree_;
  Code da[64];
  Code db[64];
  Code prod[128] = {};
  for (unsigned i = 0; i < m; ++i) {
    da[i] = a % q;
    a /= q;
    db[i] = b % q;
    b /= q;
  }
  for (unsigned i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = base.add(prod[i + j], base.mul(da[i], db[j]));
    }
  }
  for (unsigned k = 2 * m - 2; k >= m; --k) {
    const Code t = prod[k];
    if (t == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      prod[k - m + j] = base.sub(prod[k - m + j], base.mul(t, modulus_[j]));
    }
  }
  Code r = 0;
  for (unsigned i = m; i-- > 0;) r = r * q + prod[i];
  return r;
}

void Field::build_tables(TablePolicy policy) {
  if (policy == TablePolicy::none) return;
  const std::uint64_t q = order_;
  if (q <= kFullTableLimit) {
    std::vector<Code> add(q * q), mul(q * q), neg(q), inv(q, 0);
    for (Code a = 0; a < q; ++a) {
      for (Code b = 0; b < q; ++b) {
        add[a * q + b] = digit_add(a, b, false);
        mul[a * q + b] = is_prime() ? static_cast<Code>(std::uint64_t{a} * b % p_) : tower_mul(a, b);
      }
      neg[a] = digit_add(0, a, true);
    }
    for (Code a = 1; a < q; ++a) {
      for (Code b = 1; b < q; ++b) {
        if (mul[a * q + b] == 1) {
          inv[a] = b;
          break;
        }
      }
    }
    add_table_ = std::move(add);
    mul_table_ = std::move(mul);
    neg_table_ = std::move(neg);
    inv_table_ = std::move(inv);
    return;
  }
  if (is_prime() || q > kLogTableLimit) return;
  // Primitive element: g^((q-1)/r) != 1 for every prime r | q-1.
  const auto factors = distinct_prime_factors(q - 1);
  Code gen = 0;
  for (Code cand = 2; cand < q && gen == 0; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow(cand, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = cand;
  }
  std::vector<Code> exp(2 * (q - 1)), log(q, 0);
  Code cur = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp[i] = cur;
    exp[i + q - 1] = cur;
    log[cur] = static_cast<Code>(i);
    cur = tower_mul(cur, gen);
  }
  log_table_ = std::move(log);
  exp_table_ = std::move(exp);
}

Code Field::inv(Code a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + describe());
  if (!inv_table_.empty()) return inv_table_[a];
  if (!log_table_.empty()) return exp_table_[(order_ - 1) - log_table_[a]];
  if (is_prime()) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<Code>(t);
  }
  return pow(a, order_ - 2);
}

Code Field::pow(Code a, std::uint64_t e) const noexcept {
  Code result = 1;
  Code b = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, b);
    e >>= 1U;
    if (e != 0) b = mul(b, b);
  }
  return result;
}

Code Field::pow(Code a, const BigInt& e) const noexcept {
  if (e <= 0) return 1;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  Code result = 1;
  for (unsigned i = bits; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = mul(result, a);
  }
  return result;
}

Code Field::from_int(std::int64_t k) const noexcept {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

std::vector<Code> Field::to_base_digits(Code a) const {
  if (is_prime()) return {a};
  const auto q = static_cast<Code>(base_->order());
  std::vector<Code> out(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = a % q;
    a /= q;
  }
  return out;
}

Code Field::from_base_digits(std::span<const Code> digits) const {
  if (is_prime()) {
    if (digits.size() != 1 || digits[0] >= p_) fail(ErrorCode::InvalidArgument, "bad prime-field digit");
    return digits[0];
  }
  if (digits.size() != degree_) fail(ErrorCode::InvalidArgument, "expected " + std::to_string(degree_) + " base digits");
  std::uint64_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= base_->order()) fail(ErrorCode::InvalidArgument, "base digit out of range");
    r = r * base_->order() + digits[i];
  }
  return static_cast<Code>(r);
}

std::string Field::element_to_string(Code a) const {
  if (is_prime()) return std::to_string(a);
  std::string out = "[";
  const auto digits = to_base_digits(a);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += ',';
    out += base_->element_to_string(digits[i]);
  }
  out += ']';
  return out;
}

Code Field::parse_element(std::string_view text) const {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::ParseError, "empty element");
  if (text.front() != '[') {
    const std::uint64_t v = parse_u64(text);
    if (v >= order_) {
      fail(ErrorCode::ParseError, "element code " + std::to_string(v) + " out of range for " + describe());
    }
    return static_cast<Code>(v);
  }
  if (is_prime() || text.back() != ']') fail(ErrorCode::ParseError, "bad element '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  // Split at top-level commas so nested brackets survive.
  std::vector<Code> digits;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      digits.push_back(base_->parse_element(body.substr(start, i - start)));
      start = i + 1;
    } else if (body[i] == '[') {
      ++depth;
    } else if (body[i] == ']') {
      --depth;
    }
  }
  if (digits.size() != degree_) {
    fail(ErrorCode::ParseError, "expected " + std::to_string(degree_) + " coefficients in '" + std::string(text) + "'");
  }
  return from_base_digits(digits);
}

std::string Field::describe() const {
  if (is_prime()) return "F_" + std::to_string(p_);
  std::string out = base_->describe() + "[t]/(";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(modulus_[i]);
  }
  return out + ")";
}

FieldSpec make_prime_field(std::uint64_t p) {
  if (p < 2 || p >= kHardOrderLimit) fail(ErrorCode::InvalidArgument, "prime modulus out of range: " + std::to_string(p));
  if (!is_prime_number(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is composite");
  return std::make_shared<const Field>(Field::PrivateTag{}, static_cast<std::uint32_t>(p));
}

FieldSpec make_extension_with_modulus(const FieldSpec& base, std::vector<Code> modulus, TablePolicy tables,
                                      std::uint64_t order_cap) {
  if (!base) fail(ErrorCode::InvalidArgument, "null base field");
  if (modulus.size() < 3) fail(ErrorCode::BadDegree, "extension modulus must have degree >= 2");
  if (modulus.back() != 1) fail(ErrorCode::NotMonic, "extension modulus must be monic");
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  BigInt order = big_pow(BigInt(base->order()), m);
  if (order > BigInt(order_cap) || order >= BigInt(kHardOrderLimit)) {
    fail(ErrorCode::OracleCapExceeded, "extension order " + order.str() + " exceeds cap");
  }
  for (Code c : modulus) {
    if (!base->is_valid(c)) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  }
  if (!is_irreducible(Poly(base, modulus))) fail(ErrorCode::NotIrreducible, "extension modulus is reducible");
  return std::make_shared<const Field>(Field::PrivateTag{}, base, std::move(modulus), tables);
}

FieldSpec make_extension(const FieldSpec& base, unsigned m, std::uint64_t order_cap) {
  if (!base) fail(ErrorCode::InvalidArgument, "null base field");
  if (m < 2) fail(ErrorCode::BadDegree, "extension degree must be >= 2");
  BigInt order = big_pow(BigInt(base->order()), m);
  if (order > BigInt(order_cap) || order >= BigInt(kHardOrderLimit)) {
    fail(ErrorCode::OracleCapExceeded, "extension order " + order.str() + " exceeds cap");
  }
  const auto total = static_cast<std::uint64_t>(order);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto candidate = monic_from_index(base, m, idx);
    if (candidate.coeffs()[0] == 0) continue;
    if (is_irreducible(candidate)) {
      return make_extension_with_modulus(base, candidate.coeffs(), TablePolicy::automatic, order_cap);
    }
  }
  fail(ErrorCode::InternalInvariantViolation, "no irreducible polynomial of degree " + std::to_string(m));
}

PrimePower prime_power_decompose(std::uint64_t q) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "field order must be >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) fail(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return {p, k};
}

FieldSpec make_field(std::uint64_t q, std::uint64_t order_cap) {
  const auto [p, k] = prime_power_decompose(q);
  if (q > order_cap) fail(ErrorCode::OracleCapExceeded, "field order " + std::to_string(q) + " exceeds cap");
  auto prime = make_prime_field(p);
  if (k == 1) return prime;
  return make_extension(prime, k, order_cap);
}

std::uint64_t parse_field_order(std::string_view text) {
  text = trim(text);
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    const auto q = parse_u64(text);
    prime_power_decompose(q);
    return q;
  }
  const auto p = parse_u64(text.substr(0, caret));
  const auto k = parse_u64(text.substr(caret + 1));
  if (!is_prime_number(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::InvalidArgument, "exponent must be >= 1");
  BigInt q = big_pow(BigInt(p), k);
  if (q >= BigInt(kHardOrderLimit)) fail(ErrorCode::InvalidArgument, "field order too large");
  return static_cast<std::uint64_t>(q);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldSpec spec, Code code) : spec_(std::move(spec)), code_(code) {
  if (!spec_) fail(ErrorCode::InvalidArgument, "null field");
  if (!spec_->is_valid(code_)) fail(ErrorCode::InvalidArgument, "element code out of range");
}

namespace {

const FieldSpec& common_spec(const FieldElement& x, const FieldElement& y) {
  if (!(x.field() == y.field())) {
    fail(ErrorCode::SpecMismatch, x.field().describe() + " vs " + y.field().describe());
  }
  return x.spec();
}

}  // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  const auto& s = common_spec(x, y);
  return {s, s->add(x.code_, y.code_)};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  const auto& s = common_spec(x, y);
  return {s, s->sub(x.code_, y.code_)};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  const auto& s = common_spec(x, y);
  return {s, s->mul(x.code_, y.code_)};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  const auto& s = common_spec(x, y);
  return {s, s->div(x.code_, y.code_)};
}

FieldElement operator-(const FieldElement& x) { return {x.spec_, x.spec_->neg(x.code_)}; }

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.code_ == y.code_ && x.field() == y.field();
}

FieldElement arith(ArithOp op, const FieldElement& x, const FieldElement& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  fail(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

FieldElement pow(const FieldElement& x, const BigInt& e) {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  return {x.spec(), x.field().pow(x.code(), e)};
}

int quadratic_character(const Field& field, Code x) {
  if (field.characteristic() == 2) fail(ErrorCode::EvenCharacteristic, "quadratic character needs odd order");
  if (x == 0) return 0;
  return field.pow(x, (field.order() - 1) / 2) == 1 ? 1 : -1;
}

int quadratic_character(const FieldElement& x) { return quadratic_character(x.field(), x.code()); }

int absolute_trace(const Field& field, Code x) {
  if (field.characteristic() != 2) fail(ErrorCode::OddCharacteristic, "absolute trace here is over F_2");
  Code sum = 0;
  Code cur = x;
  for (unsigned i = 0; i < field.absolute_degree(); ++i) {
    sum = field.add(sum, cur);
    cur = field.mul(cur, cur);
  }
  if (sum > 1) fail(ErrorCode::InternalInvariantViolation, "trace left the prime field");
  return static_cast<int>(sum);
}

int absolute_trace(const FieldElement& x) { return absolute_trace(x.field(), x.code()); }

Code char2_sqrt(const Field& field, Code x) {
  if (field.characteristic() != 2) fail(ErrorCode::OddCharacteristic, "char2_sqrt needs characteristic 2");
  return field.pow(x, field.order() / 2);
}

}  // namespace quadirr
