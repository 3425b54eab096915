#pragma once

// Cyclotomic classes C_i = { g^{i + k u} : 0 <= u < f } for q - 1 = k f,
// cyclotomic numbers (i, j)_k = #{ x in C_i : 1 + x in C_j }, and
// dimension-n numbers [i_1, ..., i_n]_k = #{ x_r in C_{i_r} : x_1 + ... + x_n = 1 }.

#include "quartic/bigint.hpp"
#include "quartic/decomposition.hpp"
#include "quartic/error.hpp"
#include "quartic/finite_field.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace quartic {

// ---------------------------------------------------------------------------
// Linear congruences

/// Solutions of a_1 x_1 + ... + a_n x_n = b (mod r): d r^{n-1} when
/// d = gcd(a_1, ..., a_n, r) divides b, else 0.
inline BigInt linear_congruence_count(std::span<const std::int64_t> a, std::int64_t b, std::int64_t r) {
  if (r < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one coefficient");
  std::int64_t d = r;
  for (auto ai : a) {
    if (ai == 0) throw Error(ErrorKind::ZeroCoefficient, "coefficients must be nonzero");
    d = std::gcd(d, ai);
  }
  if (b % d != 0) return 0;
  return d * big_pow(BigInt(r), static_cast<unsigned>(a.size() - 1));
}

/// Solutions of a_1 x_1 + ... + a_n x_n = b (mod kf) with every x_i in
/// [0, kf/d - 1]: (kf/d)^{n-1}. NotDivisible when d does not divide b.
inline BigInt restricted_congruence_count(std::span<const std::int64_t> a, std::int64_t b, std::int64_t k,
                                          std::int64_t f) {
  if (k < 1 || f < 1) throw Error(ErrorKind::InvalidArgument, "k and f must be positive");
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one coefficient");
  std::int64_t d = k * f;
  for (auto ai : a) {
    if (ai == 0) throw Error(ErrorKind::ZeroCoefficient, "coefficients must be nonzero");
    d = std::gcd(d, ai);
  }
  if (b % d != 0)
    throw Error(ErrorKind::NotDivisible, "gcd " + std::to_string(d) + " does not divide " + std::to_string(b));
  return big_pow(BigInt(k * f / d), static_cast<unsigned>(a.size() - 1));
}

// ---------------------------------------------------------------------------
// Orders and tables

/// q - 1 = k f.
struct CyclotomicOrder {
  std::int64_t k = 0;
  std::int64_t f = 0;

  bool f_even() const { return f % 2 == 0; }
  /// kf/2 = (q-1)/2, the exponent of -1.
  std::int64_t half() const { return k * f / 2; }

  friend bool operator==(const CyclotomicOrder&, const CyclotomicOrder&) = default;
};

inline CyclotomicOrder cyclotomic_order(std::int64_t q, std::int64_t k) {
  if (k < 1 || (q - 1) % k != 0)
    throw Error(ErrorKind::BadOrder, std::to_string(k) + " does not divide q - 1 = " + std::to_string(q - 1));
  return {k, (q - 1) / k};
}

/// (i, j)_k by direct enumeration of u_1 in [0, f): 1 + g^{k u_1 + i} is
/// tested for membership in C_j. The matching u_2 is unique when it exists.
inline std::int64_t cyclotomic_number_enum(const Generator& gen, std::int64_t k, std::int64_t i, std::int64_t j) {
  const Field& field = gen.field();
  const auto ord = cyclotomic_order(field.q(), k);
  std::int64_t count = 0;
  for (std::int64_t u = 0; u < ord.f; ++u) {
    const Code y = field.add(1, gen.power(k * u + i));
    if (y != 0 && detail::floor_mod(static_cast<std::int64_t>(gen.index_of(y)) - j, k) == 0) ++count;
  }
  return count;
}

/// The k x k matrix of cyclotomic numbers, addressed with any integers
/// (indices are reduced mod k).
class CyclotomicTable {
 public:
  CyclotomicTable(CyclotomicOrder order, std::vector<std::int64_t> values)
      : order_(order), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(order_.k * order_.k))
      throw Error(ErrorKind::InvalidArgument, "table must have k^2 entries");
  }

  /// All (i, j)_k in one O(q) pass: every x outside {0, -1} contributes to
  /// exactly one entry.
  static CyclotomicTable enumerate(const Generator& gen, std::int64_t k) {
    const Field& field = gen.field();
    const auto ord = cyclotomic_order(field.q(), k);
    std::vector<std::int64_t> v(static_cast<std::size_t>(k * k), 0);
    const std::int64_t order = field.q() - 1;
    for (std::int64_t e = 0; e < order; ++e) {
      const Code y = field.add(1, gen.power(e));
      if (y == 0) continue;
      ++v[static_cast<std::size_t>((e % k) * k + gen.index_of(y) % k)];
    }
    return {ord, std::move(v)};
  }

  /// Order-4 table from the closed forms in (q, s, t).
  static CyclotomicTable quartic(const QuarticDecomposition& dec, std::int64_t q);

  const CyclotomicOrder& order() const { return order_; }
  std::int64_t k() const { return order_.k; }
  std::int64_t f() const { return order_.f; }

  std::int64_t operator()(std::int64_t i, std::int64_t j) const {
    const std::int64_t k = order_.k;
    return values_[static_cast<std::size_t>(detail::floor_mod(i, k) * k + detail::floor_mod(j, k))];
  }

  std::int64_t total() const { return std::accumulate(values_.begin(), values_.end(), std::int64_t{0}); }

  friend bool operator==(const CyclotomicTable&, const CyclotomicTable&) = default;

 private:
  CyclotomicOrder order_;
  std::vector<std::int64_t> values_;
};

namespace detail {

// Order-4 cyclotomic numbers. Each of the five classes A..E has numerator
// q + c0 + cs*s + ct*t over 16; the class of (i, j) depends on the parity of f.
struct QuarticClassNumerator {
  std::int64_t c0, cs, ct;
};

// A, B, C, D, E
inline constexpr std::array<QuarticClassNumerator, 5> kQuarticEvenF{{
    {-11, -6, 0},
    {-3, 2, 8},
    {-3, 2, 0},
    {-3, 2, -8},
    {1, -2, 0},
}};
inline constexpr std::array<QuarticClassNumerator, 5> kQuarticOddF{{
    {-7, 2, 0},
    {1, 2, -8},
    {1, -6, 0},
    {1, 2, 8},
    {-3, -2, 0},
}};

// Class letter (0 = A .. 4 = E) of (i, j)_4, row i, column j.
inline constexpr std::array<std::array<int, 4>, 4> kQuarticEvenLayout{{
    {0, 1, 2, 3},
    {1, 3, 4, 4},
    {2, 4, 2, 4},
    {3, 4, 4, 1},
}};
inline constexpr std::array<std::array<int, 4>, 4> kQuarticOddLayout{{
    {0, 1, 2, 3},
    {4, 4, 3, 1},
    {0, 4, 0, 4},
    {4, 3, 1, 4},
}};

inline std::int64_t exact_div(const BigInt& num, std::int64_t den, const char* what) {
  if (num % den != 0)
    throw Error(ErrorKind::NonIntegral,
                std::string(what) + ": numerator " + num.str() + " is not divisible by " + std::to_string(den));
  return static_cast<std::int64_t>(num / den);
}

}  // namespace detail

/// (i, j)_4 from the closed forms. NonIntegral signals an (s, t) that does not
/// belong to this q.
inline std::int64_t cyclotomic_number_quartic(std::int64_t i, std::int64_t j, const QuarticDecomposition& dec,
                                              std::int64_t q) {
  if (q % 4 != 1) throw Error(ErrorKind::WrongResidueClass, "q must be 1 mod 4");
  const bool f_even = ((q - 1) / 4) % 2 == 0;
  const auto& layout = f_even ? detail::kQuarticEvenLayout : detail::kQuarticOddLayout;
  const auto& cls = f_even ? detail::kQuarticEvenF : detail::kQuarticOddF;
  const auto& n = cls[static_cast<std::size_t>(
      layout[static_cast<std::size_t>(detail::floor_mod(i, 4))][static_cast<std::size_t>(detail::floor_mod(j, 4))])];
  const BigInt num = BigInt(q) + n.c0 + BigInt(n.cs) * dec.s + BigInt(n.ct) * dec.t;
  return detail::exact_div(num, 16, "cyclotomic number of order 4");
}

inline CyclotomicTable CyclotomicTable::quartic(const QuarticDecomposition& dec, std::int64_t q) {
  const auto ord = cyclotomic_order(q, 4);
  std::vector<std::int64_t> v(16);
  for (std::int64_t i = 0; i < 4; ++i)
    for (std::int64_t j = 0; j < 4; ++j) v[static_cast<std::size_t>(i * 4 + j)] = cyclotomic_number_quartic(i, j, dec, q);
  return {ord, std::move(v)};
}

// ---------------------------------------------------------------------------
// Dimension-n cyclotomic numbers

inline constexpr double kDimEnumCostBound = 1e8;

/// [i_1, ..., i_n]_k by enumerating the first n - 1 coordinates over their
/// classes; the last coordinate is forced to 1 - (x_1 + ... + x_{n-1}) and
/// tested for membership in C_{i_n}. TooLarge when f^n exceeds the bound.
inline std::int64_t cyclo_dim_enum(const Generator& gen, std::int64_t k, std::span<const std::int64_t> indices,
                                   double cost_bound = kDimEnumCostBound) {
  if (indices.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one index");
  const Field& field = gen.field();
  const auto ord = cyclotomic_order(field.q(), k);
  if (static_cast<double>(indices.size()) * std::log(static_cast<double>(ord.f)) > std::log(cost_bound))
    throw Error(ErrorKind::TooLarge, "f^n = " + std::to_string(ord.f) + "^" + std::to_string(indices.size()) +
                                         " exceeds the enumeration bound");
  const std::size_t n = indices.size();
  std::int64_t count = 0;
  // Depth-first over (u_1, ..., u_{n-1}), carrying the running sum.
  std::vector<std::int64_t> u(n - 1, 0);
  std::vector<Code> partial(n, 0);  // partial[r] = x_1 + ... + x_r
  std::size_t depth = 0;
  while (true) {
    if (depth == n - 1) {
      const Code last = field.sub(1, partial[n - 1]);
      if (last != 0 && detail::floor_mod(static_cast<std::int64_t>(gen.index_of(last)) - indices[n - 1], k) == 0) ++count;
      std::size_t level = n - 1;
      while (level > 0 && u[level - 1] + 1 == ord.f) {
        u[level - 1] = 0;
        --level;
      }
      if (level == 0) break;
      ++u[level - 1];
      depth = level - 1;
    }
    partial[depth + 1] = field.add(partial[depth], gen.power(k * u[depth] + indices[depth]));
    ++depth;
  }
  return count;
}

/// [i_1, i_2]_k = (i_2 - i_1, -i_1)_k.
inline std::int64_t cyclo_dim2(const CyclotomicTable& c, std::int64_t i1, std::int64_t i2) { return c(i2 - i1, -i1); }

/// [i_1, i_2, i_3]_k = alpha + sum_v (v - i_3, -i_3)_k (i_2 - i_1, v - i_1)_k,
/// alpha = f when i_1 = i_2 + kf/2 and i_3 = 0 (mod k), else 0.
inline std::int64_t cyclo_dim3(const CyclotomicTable& c, std::int64_t i1, std::int64_t i2, std::int64_t i3) {
  const std::int64_t k = c.k();
  const std::int64_t alpha =
      (detail::floor_mod(i1 - i2 - c.order().half(), k) == 0 && detail::floor_mod(i3, k) == 0) ? c.f() : 0;
  std::int64_t sum = 0;
  for (std::int64_t v = 0; v < k; ++v) sum += c(v - i3, -i3) * c(i2 - i1, v - i1);
  return alpha + sum;
}

/// [i_1, i_2, i_3, i_4]_k = gamma
///   + sum_{v_1, v_2} (v_2 - v_1, -v_1)_k (i_2 - i_1, v_1 - i_1)_k (i_4 - i_3, v_2 - i_3)_k,
/// where gamma collects the pairs summing to zero: f (i_2 - i_1, -i_1)_k when
/// i_4 - i_3 = kf/2 (mod k), plus f (i_4 - i_3, -i_3)_k when i_2 - i_1 = kf/2.
inline std::int64_t cyclo_dim4(const CyclotomicTable& c, std::int64_t i1, std::int64_t i2, std::int64_t i3,
                               std::int64_t i4) {
  const std::int64_t k = c.k();
  const std::int64_t half = c.order().half();
  std::int64_t gamma = 0;
  if (detail::floor_mod(i4 - i3 - half, k) == 0) gamma += c(i2 - i1, -i1) * c.f();
  if (detail::floor_mod(i2 - i1 - half, k) == 0) gamma += c(i4 - i3, -i3) * c.f();
  std::int64_t sum = 0;
  for (std::int64_t v1 = 0; v1 < k; ++v1)
    for (std::int64_t v2 = 0; v2 < k; ++v2) sum += c(v2 - v1, -v1) * c(i2 - i1, v1 - i1) * c(i4 - i3, v2 - i3);
  return gamma + sum;
}

/// Dispatches to the reduction formula for n in {1, 2, 3, 4}.
inline std::int64_t cyclo_dim(const CyclotomicTable& c, std::span<const std::int64_t> idx) {
  switch (idx.size()) {
    case 1: return detail::floor_mod(idx[0], c.k()) == 0 ? 1 : 0;
    case 2: return cyclo_dim2(c, idx[0], idx[1]);
    case 3: return cyclo_dim3(c, idx[0], idx[1], idx[2]);
    case 4: return cyclo_dim4(c, idx[0], idx[1], idx[2], idx[3]);
    default: throw Error(ErrorKind::InvalidArgument, "reduction formulas cover dimensions 1 to 4");
  }
}

/// Diagonal numbers [i, ..., i]_4 (n copies) in closed form, branch chosen by
/// q mod 8. The numerator must be divisible by 16, 64 or 256.
inline std::int64_t cyclo_diag_quartic(int n, std::int64_t i, const QuarticDecomposition& dec, std::int64_t q) {
  if (q % 4 != 1) throw Error(ErrorKind::WrongResidueClass, "q must be 1 mod 4");
  const BigInt Q = q, S = dec.s, T = dec.t;
  const bool q1 = q % 8 == 1;
  const auto r = static_cast<int>(detail::floor_mod(i, 4));
  BigInt num;
  switch (n) {
    case 1: return r == 0 ? 1 : 0;
    case 2: {
      const std::array<BigInt, 4> a1{Q - 6 * S - 11, Q + 2 * S - 8 * T - 3, Q + 2 * S - 3, Q + 2 * S + 8 * T - 3};
      const std::array<BigInt, 4> a5{Q + 2 * S - 7, Q + 2 * S + 8 * T + 1, Q - 6 * S + 1, Q + 2 * S - 8 * T + 1};
      return detail::exact_div((q1 ? a1 : a5)[r], 16, "dimension-2 diagonal number");
    }
    case 3: {
      const BigInt Q2 = Q * Q;
      const std::array<BigInt, 4> a1{Q2 + 14 * Q + 4 * S * S + 24 * S + 21, Q2 - 10 * Q + 8 * S * T + 24 * T + 9,
                                     Q2 - 6 * Q - 4 * S * S + 9, Q2 - 10 * Q - 8 * S * T - 24 * T + 9};
      const std::array<BigInt, 4> a5{Q2 - 6 * Q - 4 * S * S + 9, Q2 + 2 * Q - 8 * S * T - 24 * T - 3,
                                     Q2 - 6 * Q - 16 * T * T + 24 * S - 3, Q2 + 2 * Q + 8 * S * T + 24 * T - 3};
      return detail::exact_div((q1 ? a1 : a5)[r], 64, "dimension-3 diagonal number");
    }
    case 4: {
      const BigInt Q2 = Q * Q, Q3 = Q2 * Q;
      const BigInt base = Q3 - 4 * Q2;
      const std::array<BigInt, 4> a1{
          base - 79 * Q - 60 * S * Q - 20 * S * S - 60 * S - 34,
          base + 20 * S * Q - 48 * T * Q + 13 * Q - 32 * S * T - 12 * S + 16 * T * T - 48 * T - 18,
          base + 20 * S * Q + 13 * Q - 12 * S - 48 * T * T - 18,
          base + 20 * S * Q + 48 * T * Q + 13 * Q + 32 * S * T - 12 * S + 16 * T * T + 48 * T - 18,
      };
      const std::array<BigInt, 4> a5{
          base - 28 * S * Q + 25 * Q + 12 * S * S - 12 * S - 10,
          base + 4 * S * Q - 16 * T * Q - 11 * Q + 32 * S * T - 12 * S + 16 * T * T + 48 * T + 6,
          base + 20 * S * Q + 21 * Q - 60 * S + 80 * T * T + 6,
          base + 4 * S * Q + 16 * T * Q - 11 * Q - 32 * S * T - 12 * S + 16 * T * T - 48 * T + 6,
      };
      return detail::exact_div((q1 ? a1 : a5)[r], 256, "dimension-4 diagonal number");
    }
    default: throw Error(ErrorKind::InvalidArgument, "diagonal closed forms cover n = 1 to 4");
  }
}

}  // namespace quartic
