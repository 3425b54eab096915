#pragma once

// Additive characters psi(x) = exp(2 pi i Tr(x) / p), the quartic Gauss-type
// sums T_u = sum_v psi(u v^4), and the floating-point reconstruction
//   N_n(c) = q^{n-1} + (1/q) sum_{l=0}^{3} T_{g^l}^n lambda_l(c).
// Verification only: no exact path depends on anything here.

#include "quartic/bigint.hpp"
#include "quartic/decomposition.hpp"
#include "quartic/error.hpp"
#include "quartic/finite_field.hpp"
#include "quartic/genfunc.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace quartic {

using Complex = std::complex<double>;

inline Complex root_of_unity(std::uint32_t k, std::uint32_t p) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
  return {std::cos(angle), std::sin(angle)};
}

/// psi(x) = exp(2 pi i Tr(x) / p), evaluating the trace as a Frobenius sum.
inline Complex additive_character(const Field& field, Code x) { return root_of_unity(field.trace(x), field.p()); }

/// Tabulated psi over all of F_q. Traces come from linearity over the basis
/// 1, x, ..., x^{m-1}, whose traces are computed by Frobenius sums.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(const Field& field) : field_(field) {
    const std::uint32_t p = field.p();
    std::vector<std::uint32_t> basis_trace(field.m());
    Code basis = 1;
    for (std::uint32_t i = 0; i < field.m(); ++i, basis *= p) basis_trace[i] = field.trace(basis);
    traces_.resize(field.q());
    for (Code x = 0; x < field.q(); ++x) {
      std::uint64_t tr = 0;
      Code rest = x;
      for (std::uint32_t i = 0; i < field.m(); ++i, rest /= p) tr += std::uint64_t{rest % p} * basis_trace[i];
      traces_[x] = static_cast<std::uint32_t>(tr % p);
    }
    roots_.reserve(p);
    for (std::uint32_t k = 0; k < p; ++k) roots_.push_back(root_of_unity(k, p));
  }

  const Field& field() const { return field_; }
  std::uint32_t trace(Code x) const { return traces_[x]; }
  Complex operator()(Code x) const { return roots_[traces_[x]]; }

  /// sum_{x in F_q} psi(x y): q at y = 0, 0 otherwise.
  Complex character_sum(Code y) const {
    Complex acc = 0;
    for (Code x = 0; x < field_.q(); ++x) acc += (*this)(field_.mul(x, y));
    return acc;
  }

  /// T_u by direct O(q) summation.
  Complex quartic_gauss_sum(Code u) const {
    if (u == 0) throw Error(ErrorKind::InvalidArgument, "T_u needs u != 0");
    Complex acc = 0;
    for (Code v = 0; v < field_.q(); ++v) acc += (*this)(field_.mul(u, field_.pow(v, 4)));
    return acc;
  }

 private:
  Field field_;
  std::vector<std::uint32_t> traces_;
  std::vector<Complex> roots_;
};

/// T_{g^0}, ..., T_{g^3} for a field with q = 1 (mod 4), plus the class sums
/// lambda_l(c) = sum_{x in C_l} psi(-x c).
class GaussSumTable {
 public:
  explicit GaussSumTable(const FieldContext& ctx) : ctx_(ctx), psi_(ctx.field()) {
    if (!ctx.q_is_1_mod_4()) throw Error(ErrorKind::WrongResidueClass, "quartic Gauss sums need q = 1 mod 4");
    for (std::int64_t l = 0; l < 4; ++l) T_[static_cast<std::size_t>(l)] = psi_.quartic_gauss_sum(ctx.generator().power(l));
  }

  const FieldContext& context() const { return ctx_; }
  const AdditiveCharacter& psi() const { return psi_; }
  const std::array<Complex, 4>& values() const { return T_; }
  Complex operator[](std::size_t l) const { return T_.at(l); }

  Complex lambda(std::uint32_t l, Code c) const {
    const Field& field = ctx_.field();
    const Code minus_c = field.neg(field.checked(c));
    const std::int64_t f = (ctx_.q() - 1) / 4;
    Complex acc = 0;
    for (std::int64_t u = 0; u < f; ++u) acc += psi_(field.mul(ctx_.generator().power(4 * u + l), minus_c));
    return acc;
  }

 private:
  FieldContext ctx_;
  AdditiveCharacter psi_;
  std::array<Complex, 4> T_{};
};

inline constexpr double kMyersonTolerance = 1e-6;  // relative to q^2

/// |P(T_{g^l})| for the monic quartic P fixed by (q, s). ResidualTooLarge
/// when any exceeds 1e-6 q^2.
inline std::array<double, 4> verify_myerson(const GaussSumTable& table, const QuarticDecomposition& dec, std::int64_t q) {
  const Poly poly = myerson_polynomial(q, dec.s);
  std::array<double, 4> residuals{};
  for (std::size_t l = 0; l < 4; ++l) {
    Complex acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * table[l] + poly[i].convert_to<double>();
    residuals[l] = std::abs(acc);
  }
  const double limit = kMyersonTolerance * static_cast<double>(q) * static_cast<double>(q);
  for (std::size_t l = 0; l < 4; ++l)
    if (!(residuals[l] < limit))
      throw Error(ErrorKind::ResidualTooLarge, "|P(T_{g^" + std::to_string(l) + "})| = " + std::to_string(residuals[l]) +
                                                   " exceeds " + std::to_string(limit));
  return residuals;
}

inline constexpr unsigned kMaxReconstructionN = 60;

struct Reconstruction {
  BigInt value;
  double correction = 0;  // (1/q) R(n, c), before rounding
  double distance = 0;    // |correction - round(correction)|
};

/// q^{n-1} + (1/q) sum_l T_{g^l}^n lambda_l(c), rounded. NotNearInteger when
/// the correction is farther than 1e-3 max(1, q^{n/2 - 1}) from an integer.
inline Reconstruction reconstruct(const GaussSumTable& table, Code c, unsigned n) {
  const auto& ctx = table.context();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n > kMaxReconstructionN) throw Error(ErrorKind::TooLarge, "n is beyond double-precision range");
  if (ctx.field().checked(c) == 0) throw Error(ErrorKind::ZeroRHS, "reconstruction covers c != 0");
  const double q = static_cast<double>(ctx.q());
  Complex R = 0;
  for (std::uint32_t l = 0; l < 4; ++l) R += std::pow(table[l], static_cast<int>(n)) * table.lambda(l, c);
  const double correction = R.real() / q;
  const double rounded = std::round(correction);
  const double distance = std::abs(correction - rounded) + std::abs(R.imag()) / q;
  const double tolerance = 1e-3 * std::max(1.0, std::pow(q, static_cast<double>(n) / 2.0 - 1.0));
  if (!(distance < tolerance))
    throw Error(ErrorKind::NotNearInteger, "correction " + std::to_string(correction) + " is not near an integer");
  Reconstruction out;
  out.value = big_pow(BigInt(ctx.q()), n - 1) + BigInt(static_cast<long long>(rounded));
  out.correction = correction;
  out.distance = distance;
  return out;
}

inline BigInt reconstruct_N(const GaussSumTable& table, Code c, unsigned n) { return reconstruct(table, c, n).value; }

}  // namespace quartic
