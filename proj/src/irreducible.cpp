#include "quadirr/irreducible.hpp"

#include <algorithm>

namespace quadirr {

namespace {

// Columns x^(iQ) mod F for i < n, column-major. Raising a residue to the Q-th
// power is F_Q-linear, so each Frobenius step is one matrix-vector product.
std::vector<Code> frobenius_columns(const Poly& monic_f) {
  const Field& K = monic_f.field();
  const std::vector<Code>& mod = monic_f.coeffs();
  const std::uint64_t q = K.order();
  const std::size_t n = mod.size() - 1;
  std::vector<Code> cols(n * n, 0);
  cols[0] = 1;
  if (n == 1) return cols;
  if (q <= 2 * n) {
    // Walk x^k mod F one shift at a time and keep every Q-th power.
    std::vector<Code> t(n, 0);
    t[0] = 1;
    const std::uint64_t last = static_cast<std::uint64_t>(n - 1) * q;
    for (std::uint64_t k = 1; k <= last; ++k) {
      const Code carry = t[n - 1];
      for (std::size_t j = n - 1; j > 0; --j) t[j] = t[j - 1];
      t[0] = 0;
      if (carry != 0) {
        for (std::size_t j = 0; j < n; ++j) t[j] = K.sub(t[j], K.mul(carry, mod[j]));
      }
      if (k % q == 0) {
        std::copy(t.begin(), t.end(), cols.begin() + static_cast<std::ptrdiff_t>((k / q) * n));
      }
    }
    return cols;
  }
  ModulusRing ring(monic_f);
  const std::vector<Code> x{0, 1};
  const std::vector<Code> xq = ring.pow(x, q);
  std::vector<Code> cur(n, 0);
  cur[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    cur = ring.mul(cur, xq);
    std::copy(cur.begin(), cur.end(), cols.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return cols;
}

bool is_x(const std::vector<Code>& v) {
  if (v.size() < 2 || v[1] != 1 || v[0] != 0) return false;
  return std::all_of(v.begin() + 2, v.end(), [](Code c) { return c == 0; });
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
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

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.is_constant()) fail(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  const std::size_t n = *f.degree();
  if (n == 1) return true;
  const Poly F = f.monic();
  if (F.coeff(0) == 0) return false;
  const Field& K = F.field();

  std::vector<std::size_t> checkpoints;
  for (auto l : distinct_primes(n)) checkpoints.push_back(n / l);

  const std::vector<Code> cols = frobenius_columns(F);
  std::vector<Code> cur(n, 0);
  cur[1] = 1;
  std::vector<Code> next(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Code c = cur[i];
      if (c == 0) continue;
      const Code* col = cols.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) next[j] = K.add(next[j], K.mul(c, col[j]));
    }
    std::swap(cur, next);
    // x^(Q^k) = x for k < n puts every root in F_{Q^k}.
    if (k < n && is_x(cur)) return false;
    if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
      std::vector<Code> diff = cur;
      diff[1] = K.sub(diff[1], 1);
      const Poly g = gcd(Poly(F.spec(), std::move(diff)), F);
      if (!g.is_constant()) return false;
    }
  }
  return is_x(cur);
}

BigInt monic_count(const Field& field, unsigned deg) { return big_pow(BigInt(field.order()), deg); }

std::uint64_t checked_monic_count(const Field& field, unsigned deg, std::uint64_t cap) {
  const BigInt count = monic_count(field, deg);
  if (count > BigInt(cap)) {
    fail(ErrorCode::OracleCapExceeded,
         std::to_string(field.order()) + "^" + std::to_string(deg) + " exceeds cap " + std::to_string(cap));
  }
  return static_cast<std::uint64_t>(count);
}

bool naive_is_irreducible(const Poly& f, std::uint64_t cap) {
  if (f.is_constant()) fail(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  const unsigned n = static_cast<unsigned>(*f.degree());
  checked_monic_count(f.field(), (n + 1) / 2, cap);
  const Field& K = f.field();
  const std::vector<Code> target = f.monic().coeffs();
  std::vector<Code> rem;
  for (unsigned d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = checked_monic_count(K, d, cap);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Poly divisor = monic_from_index(f.spec(), d, idx);
      const auto& dc = divisor.coeffs();
      rem = target;
      for (std::size_t k = rem.size(); k-- > d;) {
        const Code t = rem[k];
        if (t == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) rem[k - d + j] = K.sub(rem[k - d + j], K.mul(t, dc[j]));
      }
      bool zero = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (rem[j] != 0) {
          zero = false;
          break;
        }
      }
      if (zero) return false;
    }
  }
  return true;
}

Poly monic_from_index(const FieldSpec& spec, unsigned deg, std::uint64_t idx) {
  const std::uint64_t q = spec->order();
  std::vector<Code> c(deg + 1, 0);
  c[deg] = 1;
  for (unsigned i = deg; i-- > 0;) {
    c[i] = static_cast<Code>(idx % q);
    idx /= q;
  }
  return Poly(spec, std::move(c));
}

void for_each_monic(const FieldSpec& spec, unsigned deg, std::uint64_t cap,
                    const std::function<void(const Poly&)>& visit) {
  const std::uint64_t count = checked_monic_count(*spec, deg, cap);
  for (std::uint64_t idx = 0; idx < count; ++idx) visit(monic_from_index(spec, deg, idx));
}

std::vector<Poly> enumerate_monic(const FieldSpec& spec, unsigned deg, std::uint64_t cap) {
  std::vector<Poly> out;
  for_each_monic(spec, deg, cap, [&](const Poly& f) { out.push_back(f); });
  return out;
}

std::vector<Poly> enumerate_irreducible(const FieldSpec& spec, unsigned deg, std::uint64_t cap, bool strict) {
  if (deg == 0) fail(ErrorCode::ConstantPolynomial, "no irreducible polynomials of degree 0");
  std::vector<Poly> out;
  for_each_monic(spec, deg, cap, [&](const Poly& f) {
    if (strict ? naive_is_irreducible(f, cap) : is_irreducible(f)) out.push_back(f);
  });
  return out;
}

unsigned element_degree_code(const Field& field, Code beta, std::uint64_t q) {
  Code cur = beta;
  for (unsigned e = 1;; ++e) {
    cur = field.pow(cur, q);
    if (cur == beta) return e;
    if (e > field.absolute_degree()) fail(ErrorCode::InternalInvariantViolation, "Frobenius orbit did not close");
  }
}

unsigned element_degree(const FieldElement& beta, const Field& over) {
  if (!beta.field().contains(over)) {
    fail(ErrorCode::SpecMismatch, beta.field().describe() + " is not built over " + over.describe());
  }
  return element_degree_code(beta.field(), beta.code(), over.order());
}

unsigned element_degree(const FieldElement& beta) {
  const Field& f = beta.field();
  return element_degree(beta, f.is_prime() ? f : *f.base());
}

int mobius(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "mobius(0)");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

DivisorTable make_divisor_table(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "divisor table of 0");
  DivisorTable t;
  t.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    while (rest % d == 0) {
      t.prime_factors.push_back(d);
      rest /= d;
    }
  }
  if (rest > 1) t.prime_factors.push_back(rest);
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      t.divisors.push_back(d);
      if (d != n / d) t.divisors.push_back(n / d);
    }
  }
  std::sort(t.divisors.begin(), t.divisors.end());
  for (auto d : t.divisors) {
    if (d % 2 == 1) t.odd_divisors.push_back(d);
  }
  return t;
}

bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace quadirr
