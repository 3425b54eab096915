#pragma once

// Finite fields F_{p^m} for odd p, small enough that every element fits in a
// 32-bit canonical code sum(c_i * p^i).

#include "quartic/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quartic {

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxFieldBound = std::uint64_t{1} << 31;
inline constexpr std::uint64_t kIndexTableThreshold = std::uint64_t{1} << 16;

/// Canonical element encoding: the integer sum(c_i * p^i), 0 <= code < q.
using Code = std::uint32_t;

namespace detail {

inline constexpr std::size_t kMaxDegree = 20;  // 3^20 > 2^31

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  b %= n;
  while (e) {
    if (e & 1) r = mul_mod(r, b, n);
    b = mul_mod(b, b, n);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors of n, ascending.
inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over F_p as coefficient vectors, constant term first. Kept
// normalized: no trailing zeros (the zero polynomial is empty).
namespace fp_poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

/// Remainder of a modulo a nonzero polynomial b.
inline Poly rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    trim(a);
  }
  return a;
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return rem(std::move(r), f, p);
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Irreducibility of a monic f of degree m >= 1: f has no factor of degree
/// d <= m/2 iff gcd(x^{p^d} - x, f) = 1 for every such d.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  Poly h{0, 1};  // x
  for (std::size_t d = 1; d <= m / 2; ++d) {
    h = pow_mod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // x^{p^d} = x mod f, so f splits over F_{p^d}
    if (gcd(diff, f, p).size() > 1) return false;
  }
  return true;
}

}  // namespace fp_poly

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, degree m, constant term first
  std::vector<std::uint32_t> pow_p;    // p^0 .. p^m
};

}  // namespace detail

class Element;

/// F_{p^m} with an explicit monic irreducible modulus. Cheap to copy; all
/// copies share one immutable description.
class Field {
 public:
  /// The field whose modulus is the irreducible monic polynomial of degree m
  /// with minimal canonical encoding. For m = 1 the modulus is x.
  static Field build(std::uint32_t p, std::uint32_t m, std::uint64_t bound = kDefaultFieldBound) {
    const std::uint32_t q = checked_order(p, m, bound);
    if (m == 1) return Field(make_data(p, 1, q, {0, 1}));
    std::vector<std::uint32_t> f(m + 1, 0);
    f[m] = 1;
    for (std::uint32_t code = 0; code < q; ++code) {
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < m; ++i, c /= p) f[i] = c % p;
      if (detail::fp_poly::is_irreducible(f, p)) return Field(make_data(p, m, q, f));
    }
    throw Error(ErrorKind::InvalidModulus, "no irreducible polynomial found");  // unreachable
  }

  /// Field with a caller-chosen modulus; rejects non-monic or reducible ones.
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                            std::uint64_t bound = kDefaultFieldBound) {
    if (modulus.size() < 2) throw Error(ErrorKind::InvalidModulus, "modulus must have degree >= 1");
    const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
    const std::uint32_t q = checked_order(p, m, bound);
    for (auto c : modulus)
      if (c >= p) throw Error(ErrorKind::InvalidModulus, "coefficient out of range [0, p)");
    if (modulus.back() != 1) throw Error(ErrorKind::InvalidModulus, "modulus must be monic");
    if (m == 1) return Field(make_data(p, 1, q, {0, 1}));
    if (!detail::fp_poly::is_irreducible(modulus, p))
      throw Error(ErrorKind::InvalidModulus, "modulus is reducible over F_" + std::to_string(p));
    return Field(make_data(p, m, q, std::move(modulus)));
  }

  std::uint32_t p() const { return d_->p; }
  std::uint32_t m() const { return d_->m; }
  std::uint32_t q() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  bool operator==(const Field& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->modulus == o.d_->modulus);
  }

  // Raw arithmetic on canonical codes. Inputs are assumed to be < q.

  Code add(Code a, Code b) const {
    const std::uint32_t p = d_->p;
    if (d_->m == 1) return (a + b) % p;
    Code r = 0;
    for (std::uint32_t i = 0; i < d_->m; ++i) {
      r += ((a % p + b % p) % p) * d_->pow_p[i];
      a /= p;
      b /= p;
    }
    return r;
  }

  Code neg(Code a) const {
    const std::uint32_t p = d_->p;
    if (d_->m == 1) return (p - a) % p;
    Code r = 0;
    for (std::uint32_t i = 0; i < d_->m; ++i) {
      r += ((p - a % p) % p) * d_->pow_p[i];
      a /= p;
    }
    return r;
  }

  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    const std::uint32_t p = d_->p;
    if (d_->m == 1) return static_cast<Code>(std::uint64_t{a} * b % p);
    const std::uint32_t m = d_->m;
    std::array<std::uint32_t, detail::kMaxDegree> ca{}, cb{};
    std::array<std::uint64_t, 2 * detail::kMaxDegree> prod{};
    for (std::uint32_t i = 0; i < m; ++i, a /= p, b /= p) {
      ca[i] = a % p;
      cb[i] = b % p;
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      if (!ca[i]) continue;
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
    }
    const auto& f = d_->modulus;
    for (std::uint32_t k = 2 * m - 2; k >= m; --k) {
      const std::uint64_t c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + c * (p - f[i])) % p;
    }
    Code r = 0;
    for (std::uint32_t i = 0; i < m; ++i) r += static_cast<Code>(prod[i]) * d_->pow_p[i];
    return r;
  }

  /// Square-and-multiply; 0^0 = 1.
  Code pow(Code a, std::uint64_t e) const {
    Code r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Code inv(Code a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "zero has no inverse");
    return pow(a, std::uint64_t{d_->q} - 2);
  }

  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  /// c * 1 for an integer c (reduced mod p).
  Code from_integer(std::int64_t c) const {
    const auto p = static_cast<std::int64_t>(d_->p);
    return static_cast<Code>(((c % p) + p) % p);
  }

  /// Tr(x) = x + x^p + ... + x^{p^{m-1}}, returned as a residue mod p.
  std::uint32_t trace(Code x) const {
    Code acc = 0;
    Code term = x;
    for (std::uint32_t i = 0; i < d_->m; ++i) {
      acc = add(acc, term);
      term = pow(term, d_->p);
    }
    return prime_subfield_residue(acc);
  }

  /// The residue c when x = c * 1; NotInPrimeSubfield otherwise.
  std::uint32_t prime_subfield_residue(Code x) const {
    if (x >= d_->p) throw Error(ErrorKind::NotInPrimeSubfield, "element " + std::to_string(x) + " is not c*1");
    return x;
  }

  std::vector<std::uint32_t> coefficients(Code x) const {
    std::vector<std::uint32_t> c(d_->m);
    for (auto& ci : c) {
      ci = x % d_->p;
      x /= d_->p;
    }
    return c;
  }

  Code encode(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != d_->m) throw Error(ErrorKind::InvalidElement, "expected " + std::to_string(d_->m) + " coefficients");
    Code r = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] >= d_->p) throw Error(ErrorKind::InvalidElement, "coefficient out of range");
      r += coeffs[i] * d_->pow_p[i];
    }
    return r;
  }

  Code checked(std::uint64_t code) const {
    if (code >= d_->q)
      throw Error(ErrorKind::InvalidElement, std::to_string(code) + " is not an element of F_" + std::to_string(d_->q));
    return static_cast<Code>(code);
  }

  Element element(std::uint64_t code) const;

  std::string describe_modulus() const {
    if (d_->m == 1) return "x";
    std::string out;
    for (std::uint32_t i = d_->m + 1; i-- > 0;) {
      const auto c = d_->modulus[i];
      if (!c) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || c != 1) out += std::to_string(c);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  static std::uint32_t checked_order(std::uint32_t p, std::uint32_t m, std::uint64_t bound) {
    if (p == 2 || !detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
    if (m == 0) throw Error(ErrorKind::InvalidModulus, "extension degree must be positive");
    bound = std::min(bound, kMaxFieldBound);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > bound)
        throw Error(ErrorKind::FieldTooLarge,
                    std::to_string(p) + "^" + std::to_string(m) + " exceeds bound " + std::to_string(bound));
    }
    return static_cast<std::uint32_t>(q);
  }

  static std::shared_ptr<const detail::FieldData> make_data(std::uint32_t p, std::uint32_t m, std::uint32_t q,
                                                            std::vector<std::uint32_t> modulus) {
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->m = m;
    d->q = q;
    d->modulus = std::move(modulus);
    d->pow_p.resize(m + 1);
    d->pow_p[0] = 1;
    for (std::uint32_t i = 1; i < m; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
    d->pow_p[m] = q;
    return d;
  }

  std::shared_ptr<const detail::FieldData> d_;
};

/// A field element bound to its field. Mixing fields raises FieldMismatch.
class Element {
 public:
  Element(Field field, Code code) : field_(std::move(field)), code_(field_.checked(code)) {}

  const Field& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(code_); }

  Element pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
  Element inverse() const { return {field_, field_.inv(code_)}; }
  std::uint32_t trace() const { return field_.trace(code_); }

  friend Element operator+(const Element& a, const Element& b) { return {a.same(b), a.field_.add(a.code_, b.code_)}; }
  friend Element operator-(const Element& a, const Element& b) { return {a.same(b), a.field_.sub(a.code_, b.code_)}; }
  friend Element operator*(const Element& a, const Element& b) { return {a.same(b), a.field_.mul(a.code_, b.code_)}; }
  friend Element operator/(const Element& a, const Element& b) { return {a.same(b), a.field_.div(a.code_, b.code_)}; }
  Element operator-() const { return {field_, field_.neg(code_)}; }

  friend bool operator==(const Element& a, const Element& b) { return a.field_ == b.field_ && a.code_ == b.code_; }

 private:
  const Field& same(const Element& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
    return field_;
  }

  Field field_;
  Code code_;
};

inline Element Field::element(std::uint64_t code) const { return {*this, checked(code)}; }

namespace detail {

struct GeneratorData {
  Field field;
  Code g = 0;
  std::vector<std::uint64_t> order_primes;  // distinct primes dividing q-1
  std::vector<Code> powers;                 // g^0 .. g^{q-2}
  std::vector<std::uint32_t> log_table;     // empty when above the table threshold
  std::unordered_map<Code, std::uint32_t> baby_steps;
  std::uint32_t giant_stride = 0;
  Code giant_factor = 0;  // g^{-giant_stride}
};

}  // namespace detail

/// A primitive element g of F_q^* together with what is needed to take
/// discrete logarithms to base g. Immutable and cheap to copy.
class Generator {
 public:
  static bool is_generator(const Field& field, Code a) {
    if (a == 0 || a >= field.q()) return false;
    const std::uint64_t order = field.q() - 1;
    for (auto l : detail::distinct_prime_factors(order))
      if (field.pow(a, order / l) == 1) return false;
    return true;
  }

  /// The generator with the smallest canonical code.
  static Generator find(const Field& field, std::uint64_t table_threshold = kIndexTableThreshold) {
    for (Code a = 1; a < field.q(); ++a)
      if (is_generator(field, a)) return Generator(field, a, table_threshold);
    throw Error(ErrorKind::InvalidGenerator, "no generator found");  // unreachable
  }

  /// Wraps a caller-chosen element after checking that its order is q-1.
  static Generator from(const Field& field, Code g, std::uint64_t table_threshold = kIndexTableThreshold) {
    if (!is_generator(field, g))
      throw Error(ErrorKind::InvalidGenerator, std::to_string(g) + " does not generate F_" + std::to_string(field.q()) + "^*");
    return Generator(field, g, table_threshold);
  }

  /// Every generator of F_q^*, ascending by code.
  static std::vector<Code> all(const Field& field) {
    const Generator first = find(field);
    const std::uint64_t order = field.q() - 1;
    std::vector<Code> out;
    for (std::uint64_t e = 1; e < order; ++e)
      if (std::gcd(e, order) == 1) out.push_back(first.power(e));
    std::sort(out.begin(), out.end());
    return out;
  }

  const Field& field() const { return d_->field; }
  Code element() const { return d_->g; }
  const std::vector<std::uint64_t>& order_primes() const { return d_->order_primes; }
  bool has_index_table() const { return !d_->log_table.empty(); }

  /// g^e for any integer exponent (reduced mod q-1).
  Code power(std::int64_t e) const {
    const auto order = static_cast<std::int64_t>(d_->powers.size());
    return d_->powers[static_cast<std::size_t>(((e % order) + order) % order)];
  }

  /// ind_g(x) in [0, q-2].
  std::uint32_t index_of(Code x) const {
    if (x == 0) throw Error(ErrorKind::ZeroHasNoIndex, "ind_g(0) is undefined");
    if (x >= d_->field.q()) throw Error(ErrorKind::InvalidElement, "not a field element");
    if (!d_->log_table.empty()) return d_->log_table[x];
    return baby_step_giant_step(x);
  }

 private:
  Generator(const Field& field, Code g, std::uint64_t table_threshold) {
    auto d = std::make_shared<detail::GeneratorData>(detail::GeneratorData{field, g, {}, {}, {}, {}, 0, 0});
    const std::uint32_t order = field.q() - 1;
    d->order_primes = detail::distinct_prime_factors(order);
    d->powers.resize(order);
    Code x = 1;
    for (std::uint32_t e = 0; e < order; ++e) {
      d->powers[e] = x;
      x = field.mul(x, g);
    }
    if (field.q() <= table_threshold) {
      d->log_table.assign(field.q(), 0);
      for (std::uint32_t e = 0; e < order; ++e) d->log_table[d->powers[e]] = e;
    } else {
      d->giant_stride = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(order))));
      d->baby_steps.reserve(d->giant_stride);
      for (std::uint32_t j = 0; j < d->giant_stride; ++j) d->baby_steps.emplace(d->powers[j], j);
      d->giant_factor = field.inv(d->powers[d->giant_stride % order]);
    }
    d_ = std::move(d);
  }

  std::uint32_t baby_step_giant_step(Code x) const {
    const std::uint32_t order = d_->field.q() - 1;
    Code y = x;
    for (std::uint32_t i = 0; i <= d_->giant_stride; ++i) {
      if (auto it = d_->baby_steps.find(y); it != d_->baby_steps.end())
        return static_cast<std::uint32_t>((std::uint64_t{i} * d_->giant_stride + it->second) % order);
      y = d_->field.mul(y, d_->giant_factor);
    }
    throw Error(ErrorKind::ZeroHasNoIndex, "discrete logarithm not found");  // unreachable for a generator
  }

  std::shared_ptr<const detail::GeneratorData> d_;
};

}  // namespace quartic
