#pragma once

#include "quartic/bigint.hpp"
#include "quartic/error.hpp"
#include "quartic/finite_field.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

/// The normalized representation q = s^2 + 4t^2 with s = 1 (mod 4) that fixes
/// every order-4 constant. The sign of t depends on the chosen generator.
struct QuarticDecomposition {
  std::int64_t s = 0;
  std::int64_t t = 0;

  friend bool operator==(const QuarticDecomposition&, const QuarticDecomposition&) = default;
};

namespace detail {

inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace detail

/// Finds (s, t) for q = 1 (mod 4).
///
/// p = 3 (mod 4): m is even and (s, t) = ((-p)^{m/2}, 0).
/// p = 1 (mod 4): the unique pair with s^2 + 4t^2 = q, s = 1 (mod 4), p not
/// dividing s, and 2t = s * zeta (mod p) where zeta = g^{3(q-1)/4} lies in the
/// prime subfield. The scan is exhaustive over |s| <= sqrt(q).
inline QuarticDecomposition quartic_decomposition(const Generator& gen) {
  const Field& field = gen.field();
  const std::int64_t q = field.q();
  const std::int64_t p = field.p();
  if (q % 4 != 1) throw Error(ErrorKind::WrongResidueClass, "q = " + std::to_string(q) + " is not 1 mod 4");

  if (p % 4 == 3) {
    std::int64_t s = 1;
    for (std::uint32_t i = 0; i < field.m() / 2; ++i) s *= -p;
    return {s, 0};
  }

  const std::int64_t zeta = field.prime_subfield_residue(gen.power(3 * (q - 1) / 4));
  std::vector<QuarticDecomposition> found;
  const std::int64_t bound = detail::isqrt(q);
  for (std::int64_t s = -bound; s <= bound; ++s) {
    if (detail::floor_mod(s, 4) != 1 || s % p == 0) continue;
    const std::int64_t rest = q - s * s;
    if (rest % 4) continue;
    const std::int64_t t0 = detail::isqrt(rest / 4);
    if (t0 * t0 != rest / 4) continue;
    for (std::int64_t t : {t0, -t0}) {
      if (detail::floor_mod(2 * t - s * zeta, p) == 0) found.push_back({s, t});
      if (t0 == 0) break;
    }
  }
  if (found.size() != 1)
    throw std::logic_error("quartic decomposition of q = " + std::to_string(q) + " is not unique (" +
                           std::to_string(found.size()) + " candidates)");
  return found.front();
}

/// Integer linear combination of the monomials 1, s, t, q, s^2, t^2, st, sq, tq.
/// The small closed-form tables (count corrections, generating-function
/// numerators) are stored as arrays of these so they can be printed and
/// audited as data.
struct QuarticForm {
  std::int64_t one = 0, s = 0, t = 0, q = 0, ss = 0, tt = 0, st = 0, sq = 0, tq = 0;

  BigInt eval(std::int64_t qv, std::int64_t sv, std::int64_t tv) const {
    const BigInt Q = qv, S = sv, T = tv;
    return BigInt(one) + s * S + t * T + q * Q + ss * S * S + tt * T * T + st * S * T + sq * S * Q + tq * T * Q;
  }
};

/// Everything derived once per (field, generator): the generator itself and,
/// for q = 1 (mod 4), the decomposition (s, t).
class FieldContext {
 public:
  explicit FieldContext(Generator gen) : gen_(std::move(gen)) {
    if (gen_.field().q() % 4 == 1) dec_ = quartic_decomposition(gen_);
  }

  /// Installs an arbitrary (s, t) without validation. Exists so tests can
  /// confirm that the closed forms detect a wrong decomposition.
  static FieldContext with_decomposition(Generator gen, QuarticDecomposition dec) {
    FieldContext ctx(std::move(gen), 0);
    ctx.dec_ = dec;
    return ctx;
  }

  static FieldContext build(std::uint32_t p, std::uint32_t m) { return FieldContext(Generator::find(Field::build(p, m))); }

  const Field& field() const { return gen_.field(); }
  const Generator& generator() const { return gen_; }
  std::int64_t q() const { return gen_.field().q(); }
  bool q_is_1_mod_4() const { return q() % 4 == 1; }
  const std::optional<QuarticDecomposition>& decomposition() const { return dec_; }

  const QuarticDecomposition& quartic() const {
    if (!dec_) throw Error(ErrorKind::WrongResidueClass, "q = " + std::to_string(q()) + " is not 1 mod 4");
    return *dec_;
  }

  /// ind_g(c) mod k.
  std::uint32_t residue_class(Code c, std::uint32_t k = 4) const { return gen_.index_of(c) % k; }

 private:
  FieldContext(Generator gen, int) : gen_(std::move(gen)) {}

  Generator gen_;
  std::optional<QuarticDecomposition> dec_;
};

}  // namespace quartic
