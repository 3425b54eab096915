#pragma once

// Slow, obviously-correct reference computations used only by the tests.
// Nothing here goes through power profiles, discrete logs, cyclotomic tables,
// characters or generating functions.

#include "quartic/quartic.hpp"

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace ref {

using quartic::BigInt;
using quartic::Code;
using quartic::Field;

struct Spec {
  std::uint32_t p;
  std::uint32_t m;
};

inline const std::vector<Spec> kQ1Fields{{5, 1}, {3, 2}, {13, 1}, {17, 1}, {5, 2}, {29, 1}, {37, 1}, {41, 1}, {7, 2}};
inline const std::vector<Spec> kQ3Fields{{7, 1}, {11, 1}, {19, 1}, {23, 1}, {3, 3}};

inline std::vector<Spec> all_fields() {
  auto out = kQ1Fields;
  out.insert(out.end(), kQ3Fields.begin(), kQ3Fields.end());
  return out;
}

/// Schoolbook product of two elements as coefficient vectors, reduced by the
/// modulus one leading term at a time.
inline Code slow_mul(const Field& F, Code a, Code b) {
  const auto p = F.p();
  const auto m = F.m();
  const auto A = F.coefficients(a), B = F.coefficients(b);
  std::vector<std::int64_t> prod(2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::int64_t{A[i]} * B[j]) % p;
  const auto& f = F.modulus();
  for (std::size_t d = prod.size(); d-- > m;) {
    const std::int64_t lead = prod[d];
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i <= m; ++i) {
      auto& slot = prod[d - m + i];
      slot = ((slot - lead * f[i]) % p + p) % p;
    }
  }
  std::vector<std::uint32_t> out(m);
  for (std::uint32_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return F.encode(out);
}

inline Code slow_pow(const Field& F, Code a, std::uint64_t e) {
  Code r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = slow_mul(F, r, a);
  return r;
}

/// N(a_1 x_1^e + ... + a_n x_n^e = c) for every c, by a plain dynamic
/// program over the partial sums.
inline std::vector<BigInt> count_all(const Field& F, const std::vector<Code>& coeffs, std::uint64_t e) {
  std::vector<BigInt> dist(F.q(), 0);
  dist[0] = 1;
  for (Code a : coeffs) {
    std::vector<BigInt> next(F.q(), 0);
    for (Code u = 0; u < F.q(); ++u) {
      if (dist[u] == 0) continue;
      for (Code x = 0; x < F.q(); ++x) next[F.add(u, slow_mul(F, a, slow_pow(F, x, e)))] += dist[u];
    }
    dist = std::move(next);
  }
  return dist;
}

inline std::vector<std::vector<BigInt>> N_table(const Field& F, unsigned nmax, std::uint64_t e = 4) {
  std::vector<std::vector<BigInt>> out;
  for (unsigned n = 1; n <= nmax; ++n) {
    if (out.empty()) {
      out.push_back(count_all(F, {1}, e));
      continue;
    }
    // extend by one variable
    std::vector<BigInt> next(F.q(), 0);
    const auto& prev = out.back();
    for (Code u = 0; u < F.q(); ++u)
      for (Code x = 0; x < F.q(); ++x) next[F.add(u, slow_pow(F, x, e))] += prev[u];
    out.push_back(std::move(next));
  }
  return out;
}

/// class_of[x] = (exponent of x base g) mod k, built by walking the powers of g.
inline std::vector<std::int64_t> class_labels(const Field& F, Code g, std::int64_t k) {
  std::vector<std::int64_t> label(F.q(), -1);
  Code x = 1;
  for (std::int64_t e = 0; e < static_cast<std::int64_t>(F.q()) - 1; ++e) {
    label[x] = e % k;
    x = slow_mul(F, x, g);
  }
  return label;
}

inline std::int64_t cyclotomic(const Field& F, Code g, std::int64_t k, std::int64_t i, std::int64_t j) {
  const auto label = class_labels(F, g, k);
  const auto mod = [k](std::int64_t v) { return ((v % k) + k) % k; };
  std::int64_t count = 0;
  for (Code x = 1; x < F.q(); ++x) {
    const Code y = F.add(x, 1);
    if (y != 0 && label[x] == mod(i) && label[y] == mod(j)) ++count;
  }
  return count;
}

/// [i_1, ..., i_n]_k by enumerating every tuple of class members.
inline std::int64_t dimension(const Field& F, Code g, std::int64_t k, const std::vector<std::int64_t>& idx) {
  const auto label = class_labels(F, g, k);
  std::vector<std::vector<Code>> members(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (Code x = 1; x < F.q(); ++x)
      if (label[x] == ((idx[i] % k) + k) % k) members[i].push_back(x);
  std::int64_t count = 0;
  std::vector<std::size_t> pos(idx.size(), 0);
  while (true) {
    Code sum = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) sum = F.add(sum, members[i][pos[i]]);
    if (sum == 1) ++count;
    std::size_t i = 0;
    while (i < idx.size() && ++pos[i] == members[i].size()) pos[i++] = 0;
    if (i == idx.size()) break;
  }
  return count;
}

/// Every (s, t) with s^2 + 4t^2 = q, s = 1 (mod 4), satisfying the sign rule
/// that ties t to g.
inline std::vector<std::pair<std::int64_t, std::int64_t>> decompositions(const Field& F, Code g) {
  const std::int64_t q = F.q(), p = F.p();
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t s = -q; s <= q; ++s) {
    if (((s % 4) + 4) % 4 != 1) continue;
    for (std::int64_t t = -q; t <= q; ++t) {
      if (s * s + 4 * t * t != q) continue;
      if (p % 4 == 3) {
        std::int64_t expect = 1;
        for (std::uint32_t i = 0; i < F.m() / 2; ++i) expect *= -p;
        if (s == expect && t == 0) out.emplace_back(s, t);
        continue;
      }
      if (s % p == 0) continue;
      const std::int64_t zeta = F.prime_subfield_residue(slow_pow(F, g, 3 * (q - 1) / 4));
      if ((((2 * t - s * zeta) % p) + p) % p == 0) out.emplace_back(s, t);
    }
  }
  return out;
}

inline quartic::FieldContext context(const Spec& s) { return quartic::FieldContext::build(s.p, s.m); }

}  // namespace ref
