#pragma once

// Rational generating functions sum_{n>=1} N_n(c) x^n and
// sum_{n>=1} M_{n+1}(y) x^n, kept as sums of rational parts, and their exact
// series expansion by the denominator recurrence.

#include "quartic/bigint.hpp"
#include "quartic/decomposition.hpp"
#include "quartic/error.hpp"
#include "quartic/finite_field.hpp"
#include "quartic/oracle.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace quartic {

/// numerator / denominator with denominator[0] = 1.
struct RationalPart {
  Poly numerator;
  Poly denominator;

  friend bool operator==(const RationalPart&, const RationalPart&) = default;
};

/// The sum of its parts. Stored unexpanded so each part stays as small as the
/// closed form it came from.
struct RationalGF {
  std::vector<RationalPart> parts;
};

/// Coefficients of x, x^2, x^3 in the correction polynomials, one row per
/// residue class ind_g(c) mod 4. kB1 applies when q = 1 (mod 8), kB2 when
/// q = 5 (mod 8).
inline constexpr std::array<std::array<QuarticForm, 3>, 4> kB1{{
    {{{.one = 3}, {.one = -3, .s = -6}, {.q = -1, .ss = 4}}},
    {{{.one = -1}, {.one = -3, .s = 2, .t = 8}, {.q = -1, .st = -8}}},
    {{{.one = -1}, {.one = -3, .s = 2}, {.q = -1, .tt = 16}}},
    {{{.one = -1}, {.one = -3, .s = 2, .t = -8}, {.q = -1, .st = 8}}},
}};
inline constexpr std::array<std::array<QuarticForm, 3>, 4> kB2{{
    {{{.one = 3}, {.one = 1, .s = 2}, {.q = 3, .ss = -4}}},
    {{{.one = -1}, {.one = 1, .s = 2, .t = -8}, {.q = 3, .st = 8}}},
    {{{.one = -1}, {.one = 1, .s = -6}, {.q = -5, .tt = -16}}},
    {{{.one = -1}, {.one = 1, .s = 2, .t = 8}, {.q = 3, .st = -8}}},
}};

/// B(c, x) = b_1 x + b_2 x^2 + b_3 x^3 for the given residue class.
inline Poly correction_polynomial(const std::array<std::array<QuarticForm, 3>, 4>& table, std::uint32_t residue,
                                  std::int64_t q, const QuarticDecomposition& dec) {
  const auto& row = table.at(residue % 4);
  return {0, row[0].eval(q, dec.s, dec.t), row[1].eval(q, dec.s, dec.t), row[2].eval(q, dec.s, dec.t)};
}

/// 1 - 6q x^2 + 8qs x^3 + (q^2 - 4qs^2) x^4 for q = 1 (mod 8),
/// 1 + 2q x^2 + 8qs x^3 + (9q^2 - 4qs^2) x^4 for q = 5 (mod 8).
inline Poly quartic_denominator(std::int64_t q, std::int64_t s) {
  if (q % 4 != 1) throw Error(ErrorKind::WrongResidueClass, "q must be 1 mod 4");
  const BigInt Q = q, S = s;
  if (q % 8 == 1) return {1, 0, -6 * Q, 8 * Q * S, Q * Q - 4 * Q * S * S};
  return {1, 0, 2 * Q, 8 * Q * S, 9 * Q * Q - 4 * Q * S * S};
}

/// Monic quartic whose roots are the four class values of the quartic Gauss
/// sum, constant term first:
///   x^4 - 6q x^2 + 8qs x + q^2 - 4qs^2   (q = 1 mod 8)
///   x^4 + 2q x^2 + 8qs x + 9q^2 - 4qs^2  (q = 5 mod 8)
/// Its reversal x^4 P(1/x) is quartic_denominator(q, s).
inline Poly myerson_polynomial(std::int64_t q, std::int64_t s) {
  Poly den = quartic_denominator(q, s);
  return Poly(den.rbegin(), den.rend());
}

inline RationalPart geometric_part(std::int64_t q, std::int64_t scale = 1) {
  return {{0, BigInt(scale)}, {1, -BigInt(q)}};
}

namespace detail {

inline void require_nonquartic(const FieldContext& ctx, Code y) {
  if (y == 0) throw Error(ErrorKind::QuarticY, "y must be nonzero");
  if (ctx.q_is_1_mod_4()) {
    if (ctx.residue_class(y) == 0) throw Error(ErrorKind::QuarticY, std::to_string(y) + " is a fourth power");
  } else if (quadratic_character(ctx.field(), y) == 1) {
    // fourth powers and squares coincide when gcd(4, q - 1) = 2
    throw Error(ErrorKind::QuarticY, std::to_string(y) + " is a square, hence a fourth power");
  }
}

}  // namespace detail

/// sum_{n>=1} N_n(c) x^n for any odd q and any c.
inline RationalGF gf_N(const FieldContext& ctx, Code c) {
  const Field& field = ctx.field();
  field.checked(c);
  const std::int64_t q = ctx.q();
  const BigInt Q = q;
  RationalGF gf{{geometric_part(q)}};

  if (!ctx.q_is_1_mod_4()) {
    const Poly den{1, 0, Q};
    if (c == 0)
      gf.parts.push_back({{0, 0, 1 - Q}, den});
    else if (quadratic_character(field, c) == 1)
      gf.parts.push_back({{0, 1, 1}, den});
    else
      gf.parts.push_back({{0, -1, 1}, den});
    return gf;
  }

  const auto& dec = ctx.quartic();
  const BigInt S = dec.s;
  const bool q1 = q % 8 == 1;
  Poly num;
  if (c == 0) {
    // (q-1) x^2 (3 - 6s x - (q - 4s^2) x^2)      q = 1 (mod 8)
    // -(q-1) x^2 (1 + 6s x + (9q - 4s^2) x^2)    q = 5 (mod 8)
    if (q1)
      num = {0, 0, 3 * (Q - 1), -6 * S * (Q - 1), -(Q - 4 * S * S) * (Q - 1)};
    else
      num = {0, 0, -(Q - 1), -6 * S * (Q - 1), -(9 * Q - 4 * S * S) * (Q - 1)};
  } else {
    // 6s x^3 + (q - 4s^2) x^4 + B_1(c, x)     q = 1 (mod 8)
    // 6s x^3 + (9q - 4s^2) x^4 + B_2(c, x)    q = 5 (mod 8)
    num = correction_polynomial(q1 ? kB1 : kB2, ctx.residue_class(c), q, dec);
    num[3] += 6 * S;
    num.push_back(q1 ? Q - 4 * S * S : 9 * Q - 4 * S * S);
  }
  gf.parts.push_back({std::move(num), quartic_denominator(q, dec.s)});
  return gf;
}

/// sum_{n>=1} M_{n+1}(y) x^n for non-quartic y. For q = 5 (mod 8) the table
/// is read at -y, not y.
inline RationalGF gf_M(const FieldContext& ctx, Code y) {
  const Field& field = ctx.field();
  field.checked(y);
  detail::require_nonquartic(ctx, y);
  const std::int64_t q = ctx.q();
  const BigInt Q = q;
  RationalGF gf{{geometric_part(q, q)}};

  if (!ctx.q_is_1_mod_4()) {
    gf.parts.push_back({{0, Q - 1}, {1, 0, Q}});
    return gf;
  }

  const auto& dec = ctx.quartic();
  Poly num;
  if (q % 8 == 1) {
    num = correction_polynomial(kB1, ctx.residue_class(y), q, dec);
    num[2] += 3;
  } else {
    num = correction_polynomial(kB2, ctx.residue_class(field.neg(y)), q, dec);
    num[2] -= 1;
  }
  for (auto& v : num) v *= Q - 1;
  gf.parts.push_back({std::move(num), quartic_denominator(q, dec.s)});
  return gf;
}

/// Coefficients c_1 .. c_count of numerator/denominator, using
/// c_n = num_n - sum_{i>=1} den_i c_{n-i}.
inline std::vector<BigInt> series(const RationalPart& part, std::size_t count) {
  const auto& den = part.denominator;
  if (den.empty() || den[0] != 1) throw Error(ErrorKind::BadDenominator, "denominator must have constant term 1");
  std::vector<BigInt> c(count + 1, 0);
  for (std::size_t n = 0; n <= count; ++n) {
    BigInt v = n < part.numerator.size() ? part.numerator[n] : BigInt(0);
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) v -= den[i] * c[n - i];
    c[n] = std::move(v);
  }
  c.erase(c.begin());
  return c;
}

inline std::vector<BigInt> series(const RationalGF& gf, std::size_t count) {
  std::vector<BigInt> total(count, 0);
  for (const auto& part : gf.parts) {
    const auto s = series(part, count);
    for (std::size_t i = 0; i < count; ++i) total[i] += s[i];
  }
  return total;
}

/// Coefficients a_1..a_4 of D(n) = a_1 D(n-1) + a_2 D(n-2) + a_3 D(n-3) + a_4 D(n-4),
/// read off the quartic denominator.
inline std::array<BigInt, 4> recurrence_coefficients(std::int64_t q, std::int64_t s) {
  const Poly den = quartic_denominator(q, s);
  return {-den[1], -den[2], -den[3], -den[4]};
}

struct RecurrenceReport {
  std::array<BigInt, 4> coefficients;
  std::vector<BigInt> residuals;  // residuals[k] belongs to n = 5 + k

  bool holds() const {
    for (const auto& r : residuals)
      if (!r.is_zero()) return false;
    return true;
  }
};

/// Checks that D(n) = N_n(c) - q^{n-1}, with N_n(c) taken from the
/// convolution oracle, obeys the order-4 recurrence for 5 <= n <= nmax.
inline RecurrenceReport recurrence_check(const FieldContext& ctx, Code c, std::size_t nmax) {
  if (!ctx.q_is_1_mod_4()) throw Error(ErrorKind::WrongResidueClass, "q must be 1 mod 4");
  if (c == 0) throw Error(ErrorKind::ZeroRHS, "the recurrence check is for c != 0");
  if (nmax < 5) throw Error(ErrorKind::InvalidArgument, "nmax must be at least 5");
  const std::int64_t q = ctx.q();
  const auto dists = oracle_distributions(ctx.field(), nmax);
  std::vector<BigInt> D(nmax + 1, 0);
  BigInt qpow = 1;
  for (std::size_t n = 1; n <= nmax; ++n) {
    D[n] = dists[n - 1][c] - qpow;
    qpow *= q;
  }
  RecurrenceReport report{recurrence_coefficients(q, ctx.quartic().s), {}};
  for (std::size_t n = 5; n <= nmax; ++n) {
    BigInt r = D[n];
    for (std::size_t i = 1; i <= 4; ++i) r -= report.coefficients[i - 1] * D[n - i];
    report.residuals.push_back(std::move(r));
  }
  return report;
}

}  // namespace quartic
