#pragma once

// Prime fields F_p and tower extensions F_{Q^m} = F_Q[t]/(modulus).
//
// Elements are stored as canonical integer codes. A prime-field element is its
// residue in [0, p). An extension element c_0 + c_1 t + ... + c_{m-1} t^{m-1}
// has code sum c_i * Q^i where Q is the base order and c_i are base codes.
// Unrolled over the whole tower the code is the base-p positional encoding of
// the element, so a subfield element keeps its code in every field above it.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadirr/bigint.hpp"
#include "quadirr/error.hpp"

namespace quadirr {

using Code = std::uint32_t;

class Field;
using FieldSpec = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 24;
// Codes are 32-bit; no field may reach 2^32 elements.
inline constexpr std::uint64_t kHardOrderLimit = std::uint64_t{1} << 32;

enum class TablePolicy { automatic, none };

class Field {
  struct PrivateTag {};

 public:
  enum class Kind { prime, extension };

  Field(PrivateTag, std::uint32_t p);
  Field(PrivateTag, FieldSpec base, std::vector<Code> modulus, TablePolicy tables);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return order_; }
  // Degree over the immediate base (1 for a prime field).
  unsigned degree() const noexcept { return degree_; }
  // k with order = p^k.
  unsigned absolute_degree() const noexcept { return abs_degree_; }
  const FieldSpec& base() const noexcept { return base_; }
  // Monic modulus over the base, ascending base codes, length degree()+1.
  const std::vector<Code>& modulus() const noexcept { return modulus_; }
  // The prime field at the bottom of the tower (this field itself if prime).
  const Field& prime_field() const noexcept;

  bool contains(const Field& sub) const noexcept;
  bool is_valid(Code c) const noexcept { return c < order_; }

  Code add(Code a, Code b) const noexcept {
    if (!add_table_.empty()) return add_table_[a * order_ + b];
    if (p_ == 2) return a ^ b;
    return digit_add(a, b, false);
  }
  Code sub(Code a, Code b) const noexcept {
    if (!add_table_.empty()) return add_table_[a * order_ + neg_table_[b]];
    if (p_ == 2) return a ^ b;
    return digit_add(a, b, true);
  }
  Code neg(Code a) const noexcept {
    if (!neg_table_.empty()) return neg_table_[a];
    if (p_ == 2) return a;
    return digit_add(0, a, true);
  }
  Code mul(Code a, Code b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[a * order_ + b];
    if (kind_ == Kind::prime) {
      return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
    }
    if (!log_table_.empty()) {
      if (a == 0 || b == 0) return 0;
      return exp_table_[log_table_[a] + log_table_[b]];
    }
    return tower_mul(a, b);
  }
  // Throws DivisionByZero for a == 0.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  // 0^0 = 1.
  Code pow(Code a, std::uint64_t e) const noexcept;
  Code pow(Code a, const BigInt& e) const noexcept;
  // Integer k mapped into the prime subfield.
  Code from_int(std::int64_t k) const noexcept;

  // Base-field digits of an extension element (length degree()).
  std::vector<Code> to_base_digits(Code a) const;
  Code from_base_digits(std::span<const Code> digits) const;

  std::string element_to_string(Code a) const;
  Code parse_element(std::string_view text) const;
  // Short human description, e.g. "F_3" or "F_3[t]/(1,0,1)".
  std::string describe() const;

  bool operator==(const Field& other) const noexcept;

 private:
  Code digit_add(Code a, Code b, bool subtract) const noexcept;
  Code tower_mul(Code a, Code b) const noexcept;
  void build_tables(TablePolicy policy);

  Kind kind_;
  std::uint32_t p_ = 0;
  std::uint64_t order_ = 0;
  unsigned degree_ = 1;
  unsigned abs_degree_ = 1;
  FieldSpec base_;
  std::vector<Code> modulus_;

  std::vector<Code> add_table_;
  std::vector<Code> mul_table_;
  std::vector<Code> neg_table_;
  std::vector<Code> inv_table_;
  std::vector<Code> log_table_;
  std::vector<Code> exp_table_;  // doubled so log a + log b needs no reduction

  friend FieldSpec make_prime_field(std::uint64_t p);
  friend FieldSpec make_extension_with_modulus(const FieldSpec& base, std::vector<Code> modulus,
                                               TablePolicy tables, std::uint64_t order_cap);
};

bool is_prime_number(std::uint64_t n) noexcept;

// Throws NotPrime for composite p, InvalidArgument for p < 2 or p >= 2^32.
FieldSpec make_prime_field(std::uint64_t p);

// Extension of degree m over base whose modulus is the lexicographically least
// monic irreducible: the tuple (c_0, ..., c_{m-1}) is compared with c_0 most
// significant, base elements by code.
FieldSpec make_extension(const FieldSpec& base, unsigned m,
                         std::uint64_t order_cap = kDefaultOrderCap);

// Extension by an explicit monic irreducible modulus (ascending base codes).
// Throws NotMonic, BadDegree or NotIrreducible.
FieldSpec make_extension_with_modulus(const FieldSpec& base, std::vector<Code> modulus,
                                      TablePolicy tables = TablePolicy::automatic,
                                      std::uint64_t order_cap = kDefaultOrderCap);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
};

// Decomposes q = p^k; InvalidArgument if q is not a prime power.
PrimePower prime_power_decompose(std::uint64_t q);

// F_q as F_p (k = 1) or make_extension(F_p, k).
FieldSpec make_field(std::uint64_t q, std::uint64_t order_cap = kDefaultOrderCap);

// Accepts "N" or "p^k".
std::uint64_t parse_field_order(std::string_view text);

class FieldElement {
 public:
  FieldElement(FieldSpec spec, Code code);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }

  const FieldSpec& spec() const noexcept { return spec_; }
  const Field& field() const noexcept { return *spec_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  // Bracketed for extensions ("[1,2]" = 1 + 2t), decimal for prime fields.
  std::string to_string() const { return spec_->element_to_string(code_); }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x);
  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  FieldSpec spec_;
  Code code_;
};

enum class ArithOp { add, sub, mul, div };

FieldElement arith(ArithOp op, const FieldElement& x, const FieldElement& y);
// 0^0 = 1 by convention.
FieldElement pow(const FieldElement& x, const BigInt& e);

// eta(x) in {-1, 0, +1}; EvenCharacteristic in characteristic 2.
int quadratic_character(const FieldElement& x);
int quadratic_character(const Field& field, Code x);

// Tr_{F_Q/F_2}(x) as 0 or 1; OddCharacteristic in odd characteristic.
int absolute_trace(const FieldElement& x);
int absolute_trace(const Field& field, Code x);

// Square root in characteristic 2, x^(Q/2).
Code char2_sqrt(const Field& field, Code x);

}  // namespace quadirr
