#pragma once

// Brute-force point counts for diagonal forms a_1 x_1^e + ... + a_n x_n^e = c.
// These never use cyclotomy, characters or generating functions, so every
// closed form in the library can be checked against them.

#include "quartic/bigint.hpp"
#include "quartic/error.hpp"
#include "quartic/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quartic {

inline constexpr double kOracleCostBound = 1e9;
inline constexpr double kLiteralCostBound = 2e7;

/// Histogram of x -> x^e over F_q: w[c] = #{ x : x^e = c }.
struct PowerResidueProfile {
  std::uint64_t exponent = 0;
  std::uint64_t d = 0;  // gcd(e, q - 1)
  std::vector<std::uint64_t> w;
};

/// Quadratic character: 1 on nonzero squares, -1 on non-squares, 0 at 0.
inline int quadratic_character(const Field& field, Code c) {
  if (c == 0) return 0;
  return field.pow(c, (std::uint64_t{field.q()} - 1) / 2) == 1 ? 1 : -1;
}

/// Enumerates x^e for every x, then cross-checks each bucket against the
/// d-th power residue rule w(c) = d * [c^{(q-1)/d} = 1] for c != 0.
inline PowerResidueProfile power_profile(const Field& field, std::uint64_t e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  const std::uint64_t order = field.q() - 1;
  PowerResidueProfile prof{e, std::gcd(e, order), std::vector<std::uint64_t>(field.q(), 0)};
  for (Code x = 0; x < field.q(); ++x) ++prof.w[field.pow(x, e)];
  if (prof.w[0] != 1) throw std::logic_error("power profile: x^e = 0 must have exactly one root");
  for (Code c = 1; c < field.q(); ++c) {
    const std::uint64_t expected = field.pow(c, order / prof.d) == 1 ? prof.d : 0;
    if (prof.w[c] != expected)
      throw std::logic_error("power profile disagrees with the power residue rule at " + std::to_string(c));
  }
  return prof;
}

/// N(a_1 x_1^e + ... + a_n x_n^e = c) for every c at once, by iterated
/// additive convolution of the scaled power profiles. O(n q^2) worst case.
inline std::vector<BigInt> oracle_distribution(const Field& field, std::span<const Code> coeffs, std::uint64_t e,
                                               double cost_bound = kOracleCostBound) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
  const double q = field.q();
  if (static_cast<double>(coeffs.size()) * q * q > cost_bound)
    throw Error(ErrorKind::TooLarge, "n q^2 exceeds the oracle cost bound");
  for (auto a : coeffs) {
    if (a == 0) throw Error(ErrorKind::ZeroCoefficient, "coefficients must be nonzero");
    field.checked(a);
  }
  const auto prof = power_profile(field, e);
  std::vector<std::pair<Code, std::uint64_t>> support;
  for (Code y = 0; y < field.q(); ++y)
    if (prof.w[y]) support.emplace_back(y, prof.w[y]);

  std::vector<BigInt> dist(field.q(), 0);
  dist[0] = 1;
  std::vector<BigInt> next(field.q());
  for (auto a : coeffs) {
    std::fill(next.begin(), next.end(), BigInt(0));
    std::vector<std::pair<Code, std::uint64_t>> scaled;
    scaled.reserve(support.size());
    for (auto [y, w] : support) scaled.emplace_back(field.mul(a, y), w);
    for (Code u = 0; u < field.q(); ++u) {
      if (dist[u].is_zero()) continue;
      for (auto [z, w] : scaled) next[field.add(u, z)] += dist[u] * w;
    }
    dist.swap(next);
  }
  return dist;
}

/// Distributions for the all-ones form x_1^e + ... + x_n^e, n = 1 .. nmax,
/// sharing the convolution work: result[n - 1][c] = N_n(c).
inline std::vector<std::vector<BigInt>> oracle_distributions(const Field& field, std::size_t nmax, std::uint64_t e = 4,
                                                             double cost_bound = kOracleCostBound) {
  const double q = field.q();
  if (static_cast<double>(nmax) * q * q > cost_bound) throw Error(ErrorKind::TooLarge, "n q^2 exceeds the oracle cost bound");
  std::vector<std::vector<BigInt>> out;
  if (nmax == 0) return out;
  const Code one = 1;
  out.push_back(oracle_distribution(field, std::span<const Code>(&one, 1), e, cost_bound));
  const auto& first = out.front();
  std::vector<std::pair<Code, BigInt>> support;
  for (Code y = 0; y < field.q(); ++y)
    if (!first[y].is_zero()) support.emplace_back(y, first[y]);
  for (std::size_t n = 2; n <= nmax; ++n) {
    const auto& prev = out.back();
    std::vector<BigInt> next(field.q(), 0);
    for (Code u = 0; u < field.q(); ++u) {
      if (prev[u].is_zero()) continue;
      for (const auto& [z, w] : support) next[field.add(u, z)] += prev[u] * w;
    }
    out.push_back(std::move(next));
  }
  return out;
}

inline BigInt oracle_count(const Field& field, std::span<const Code> coeffs, Code c, std::uint64_t e = 4,
                           double cost_bound = kOracleCostBound) {
  field.checked(c);
  return oracle_distribution(field, coeffs, e, cost_bound)[c];
}

/// Literal q^n enumeration of the same count; only for tiny inputs.
inline BigInt oracle_count_literal(const Field& field, std::span<const Code> coeffs, Code c, std::uint64_t e = 4) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
  const double cost = std::pow(static_cast<double>(field.q()), static_cast<double>(coeffs.size()));
  if (cost > kLiteralCostBound) throw Error(ErrorKind::TooLarge, "q^n exceeds the literal enumeration bound");
  std::vector<Code> powers(field.q());
  for (Code x = 0; x < field.q(); ++x) powers[x] = field.pow(x, e);
  const std::size_t n = coeffs.size();
  std::vector<Code> x(n, 0);
  std::uint64_t count = 0;
  while (true) {
    Code sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum = field.add(sum, field.mul(coeffs[i], powers[x[i]]));
    if (sum == c) ++count;
    std::size_t i = 0;
    while (i < n && ++x[i] == field.q()) x[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace quartic
