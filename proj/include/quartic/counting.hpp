#pragma once

// Point counts N_n(c) = #{ x in F_q^n : x_1^4 + ... + x_n^4 = c } and
// M_n(y) = #{ x in F_q^n : x_1^4 + ... + x_{n-1}^4 + y x_n^4 = 0 }.

#include "quartic/bigint.hpp"
#include "quartic/cyclotomy.hpp"
#include "quartic/decomposition.hpp"
#include "quartic/error.hpp"
#include "quartic/finite_field.hpp"
#include "quartic/genfunc.hpp"
#include "quartic/oracle.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

// Residue-class corrections for N_2, N_3, N_4 at c != 0, indexed by
// ind_g(c) mod 4. Odd-numbered tables belong to q = 1 (mod 8), even-numbered
// ones to q = 5 (mod 8).
inline constexpr std::array<QuarticForm, 4> kEpsilon1{{{.s = -6}, {.s = 2, .t = 8}, {.s = 2}, {.s = 2, .t = -8}}};
inline constexpr std::array<QuarticForm, 4> kEpsilon2{{{.s = 2}, {.s = 2, .t = -8}, {.s = -6}, {.s = 2, .t = 8}}};
inline constexpr std::array<QuarticForm, 4> kEpsilon3{
    {{.q = 17, .ss = 4}, {.q = -7, .st = -8}, {.q = -7, .tt = 16}, {.q = -7, .st = 8}}};
inline constexpr std::array<QuarticForm, 4> kEpsilon4{
    {{.q = -3, .ss = -4}, {.q = 5, .st = 8}, {.q = -3, .tt = -16}, {.q = 5, .st = -8}}};
inline constexpr std::array<QuarticForm, 4> kEpsilon5{{{.sq = -60}, {.sq = 20, .tq = 48}, {.sq = 20}, {.sq = 20, .tq = -48}}};
inline constexpr std::array<QuarticForm, 4> kEpsilon6{{{.sq = -28}, {.sq = 4, .tq = 16}, {.sq = 20}, {.sq = 4, .tq = -16}}};

/// N(x_1^2 + ... + x_n^2 = c) over any F_q with q odd:
///   q^{n-1} + v(c) q^{(n-2)/2} eta((-1)^{n/2})   for n even,
///   q^{n-1} + q^{(n-1)/2} eta((-1)^{(n-1)/2} c)  for n odd,
/// with v(0) = q - 1 and v(c) = -1 otherwise. For q = 3 (mod 4) this is
/// also the quartic count, since fourth powers and squares coincide.
inline BigInt count_quadratic_form(const Field& field, Code c, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  field.checked(c);
  const BigInt Q = field.q();
  const Code minus_one = field.neg(1);
  BigInt result = big_pow(Q, n - 1);
  if (n % 2 == 0) {
    const BigInt v = c == 0 ? Q - 1 : BigInt(-1);
    const int eta = quadratic_character(field, (n / 2) % 2 ? minus_one : Code{1});
    result += v * big_pow(Q, (n - 2) / 2) * eta;
  } else {
    const Code arg = ((n - 1) / 2) % 2 ? field.mul(minus_one, c) : c;
    result += big_pow(Q, (n - 1) / 2) * quadratic_character(field, arg);
  }
  return result;
}

/// Closed-form N_n(c) for 1 <= n <= 4, c != 0 and q = 1 (mod 4).
inline BigInt count_small(const FieldContext& ctx, Code c, unsigned n) {
  if (!ctx.q_is_1_mod_4()) throw Error(ErrorKind::WrongResidueClass, "closed forms need q = 1 mod 4");
  ctx.field().checked(c);
  if (c == 0) throw Error(ErrorKind::ZeroRHS, "closed forms cover c != 0; use count_N");
  if (n < 1 || n > 4) throw Error(ErrorKind::InvalidArgument, "closed forms cover n = 1 to 4");
  const std::int64_t q = ctx.q();
  const auto& dec = ctx.quartic();
  const auto i = ctx.residue_class(c);
  const bool q1 = q % 8 == 1;
  const BigInt Q = q, S = dec.s;
  const auto eps = [&](const std::array<QuarticForm, 4>& table) { return table[i].eval(q, dec.s, dec.t); };
  switch (n) {
    case 1: return i == 0 ? 4 : 0;
    case 2: return Q + (q1 ? BigInt(-3) + eps(kEpsilon1) : BigInt(1) + eps(kEpsilon2));
    case 3: return Q * Q + 6 * S + (q1 ? eps(kEpsilon3) : eps(kEpsilon4));
    default: return Q * Q * Q - 4 * S * S + (q1 ? eps(kEpsilon5) - 17 * Q : eps(kEpsilon6) + 7 * Q);
  }
}

/// N_n(c) for every odd q, every c and every n >= 1.
///   q = 3 (mod 4): the quadratic-form closed form.
///   q = 1 (mod 4): coefficient n of the rational generating function (for
///   c = 0 this is the classical N_n(0) series; the residue-class closed
///   forms are never applied at c = 0).
inline BigInt count_N(const FieldContext& ctx, Code c, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (!ctx.q_is_1_mod_4()) return count_quadratic_form(ctx.field(), c, n);
  return series(gf_N(ctx, c), n)[n - 1];
}

/// N_n(c) for n <= 4 assembled from dimension-n cyclotomic numbers:
/// N'_j(c) = 4^j [4-i, ..., 4-i]_4 counts solutions with all j coordinates
/// nonzero (i = ind_g(c) mod 4), and N_n(c) = sum_j C(n, j) N'_j(c).
/// The cyclotomic numbers go through the reduction formulas over `table`.
inline BigInt count_via_cyclotomy(const FieldContext& ctx, Code c, unsigned n, const CyclotomicTable& table) {
  if (!ctx.q_is_1_mod_4()) throw Error(ErrorKind::WrongResidueClass, "needs q = 1 mod 4");
  ctx.field().checked(c);
  if (c == 0) throw Error(ErrorKind::ZeroRHS, "the cyclotomic route covers c != 0");
  if (n < 1 || n > 4) throw Error(ErrorKind::InvalidArgument, "the cyclotomic route covers n = 1 to 4");
  if (table.k() != 4) throw Error(ErrorKind::BadOrder, "expected an order-4 table");
  const std::int64_t label = 4 - static_cast<std::int64_t>(ctx.residue_class(c));
  static constexpr std::array<std::array<int, 5>, 5> kBinomial{{
      {1, 0, 0, 0, 0},
      {1, 1, 0, 0, 0},
      {1, 2, 1, 0, 0},
      {1, 3, 3, 1, 0},
      {1, 4, 6, 4, 1},
  }};
  BigInt total = 0;
  std::int64_t four_pow = 1;
  for (unsigned j = 1; j <= n; ++j) {
    four_pow *= 4;
    const std::vector<std::int64_t> idx(j, label);
    total += BigInt(kBinomial[n][j]) * four_pow * cyclo_dim(table, idx);
  }
  return total;
}

inline BigInt count_via_cyclotomy(const FieldContext& ctx, Code c, unsigned n) {
  if (!ctx.q_is_1_mod_4()) throw Error(ErrorKind::WrongResidueClass, "needs q = 1 mod 4");
  return count_via_cyclotomy(ctx, c, n, CyclotomicTable::quartic(ctx.quartic(), ctx.q()));
}

/// M_n(y) for non-quartic y and n >= 2 through
///   M_n(y) = N_{n-1}(0) + (q - 1) N_{n-1}(y'),
/// y' = (-1)^{(q-1)/4} y when q = 1 (mod 4) and y' = -y when q = 3 (mod 4).
/// The value is checked against coefficient n - 1 of gf_M.
inline BigInt count_M(const FieldContext& ctx, Code y, unsigned n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "M_n needs n >= 2");
  const Field& field = ctx.field();
  field.checked(y);
  detail::require_nonquartic(ctx, y);
  const std::int64_t q = ctx.q();
  Code shifted = field.neg(y);
  if (ctx.q_is_1_mod_4() && ((q - 1) / 4) % 2 == 0) shifted = y;
  BigInt value = count_N(ctx, 0, n - 1) + BigInt(q - 1) * count_N(ctx, shifted, n - 1);
  const BigInt from_series = series(gf_M(ctx, y), n - 1)[n - 2];
  if (value != from_series)
    throw std::logic_error("M_" + std::to_string(n) + "(" + std::to_string(y) + "): relation gives " + value.str() +
                           " but the generating function gives " + from_series.str());
  return value;
}

}  // namespace quartic
