#include "support/reference.hpp"

#include <gtest/gtest.h>

using namespace quartic;

namespace {

template <class Fn>
void expect_kind(ErrorKind kind, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

Poly P(std::initializer_list<long long> v) {
  Poly out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(GfN, QuarticZeroSeriesAtFive) {
  const auto gf = gf_N(FieldContext::build(5, 1), 0);
  ASSERT_EQ(gf.parts.size(), 2u);
  EXPECT_EQ(gf.parts[0], (RationalPart{P({0, 1}), P({1, -5})}));
  EXPECT_EQ(gf.parts[1], (RationalPart{P({0, 0, -4, -24, -164}), P({1, 0, 10, 40, 205})}));
}

TEST(GfN, SquareRightHandSideAtSeven) {
  const auto gf = gf_N(FieldContext::build(7, 1), 1);
  ASSERT_EQ(gf.parts.size(), 2u);
  EXPECT_EQ(gf.parts[0], (RationalPart{P({0, 1}), P({1, -7})}));
  EXPECT_EQ(gf.parts[1], (RationalPart{P({0, 1, 1}), P({1, 0, 7})}));
}

TEST(GfN, ThirteenAtOne) {
  const auto gf = gf_N(FieldContext::build(13, 1), 1);
  ASSERT_EQ(gf.parts.size(), 2u);
  EXPECT_EQ(gf.parts[0], (RationalPart{P({0, 1}), P({1, -13})}));
  EXPECT_EQ(gf.parts[1], (RationalPart{P({0, 3, -5, -15, 81}), P({1, 0, 26, -312, 1053})}));
}

TEST(GfM, Examples) {
  const auto q5 = gf_M(FieldContext::build(5, 1), 2);
  ASSERT_EQ(q5.parts.size(), 2u);
  EXPECT_EQ(q5.parts[0], (RationalPart{P({0, 5}), P({1, -5})}));
  EXPECT_EQ(q5.parts[1], (RationalPart{P({0, -4, -24, 92}), P({1, 0, 10, 40, 205})}));
  const auto q7 = gf_M(FieldContext::build(7, 1), 3);
  ASSERT_EQ(q7.parts.size(), 2u);
  EXPECT_EQ(q7.parts[0], (RationalPart{P({0, 7}), P({1, -7})}));
  EXPECT_EQ(q7.parts[1], (RationalPart{P({0, 6}), P({1, 0, 7})}));
  EXPECT_EQ(series(q7, 1)[0], 13);
  expect_kind(ErrorKind::QuarticY, [] { gf_M(FieldContext::build(5, 1), 1); });
  expect_kind(ErrorKind::QuarticY, [] { gf_M(FieldContext::build(7, 1), 2); });
}

TEST(Series, Examples) {
  EXPECT_EQ(series(geometric_part(5), 4), P({1, 5, 25, 125}));
  EXPECT_EQ(series(gf_N(FieldContext::build(5, 1), 0), 5), P({1, 1, 1, 1, 1025}));
  EXPECT_EQ(series(gf_M(FieldContext::build(5, 1), 2), 2), P({1, 1}));
  expect_kind(ErrorKind::BadDenominator, [] { series(RationalPart{P({1}), P({2, 1})}, 3); });
  expect_kind(ErrorKind::BadDenominator, [] { series(RationalPart{P({1}), P({})}, 3); });
}

TEST(Series, GeometricPartRecurrence) {
  const auto c = series(geometric_part(13), 12);
  for (std::size_t n = 1; n < c.size(); ++n) EXPECT_EQ(c[n], 13 * c[n - 1]);
}

TEST(Series, SumOfParts) {
  const auto ctx = FieldContext::build(17, 1);
  for (Code c = 0; c < 17; ++c) {
    const auto gf = gf_N(ctx, c);
    const auto total = series(gf, 10);
    auto sum = series(gf.parts[0], 10);
    const auto second = series(gf.parts[1], 10);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += second[i];
    EXPECT_EQ(total, sum);
  }
}

TEST(Series, NMatchesReference) {
  for (const auto& s : ref::all_fields()) {
    const auto ctx = ref::context(s);
    const auto want = ref::N_table(ctx.field(), 8);
    for (Code c = 0; c < ctx.q(); ++c) {
      const auto got = series(gf_N(ctx, c), 8);
      for (unsigned n = 1; n <= 8; ++n) ASSERT_EQ(got[n - 1], want[n - 1][c]) << "q=" << ctx.q() << " c=" << c << " n=" << n;
      if (ctx.q_is_1_mod_4() && c != 0) {
        for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(got[n - 1], count_small(ctx, c, n));
      }
    }
  }
}

TEST(Series, MMatchesReference) {
  for (const auto& s : ref::all_fields()) {
    const auto ctx = ref::context(s);
    const Field& F = ctx.field();
    if (F.q() > 29) continue;
    for (Code y = 1; y < F.q(); ++y) {
      RationalGF gf;
      try {
        gf = gf_M(ctx, y);
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::QuarticY);
        continue;
      }
      const auto coeffs = series(gf, 5);
      for (unsigned n = 1; n <= 5; ++n) {
        std::vector<Code> a(n + 1, 1);
        a.back() = y;
        ASSERT_EQ(coeffs[n - 1], ref::count_all(F, a, 4)[0]) << "q=" << F.q() << " y=" << y;
      }
    }
  }
}

TEST(Denominator, ReversalOfMyersonQuartic) {
  for (const auto& s : ref::kQ1Fields) {
    const auto ctx = ref::context(s);
    const auto q = ctx.q();
    const auto sv = ctx.quartic().s;
    const Poly den = quartic_denominator(q, sv);
    const Poly P4 = myerson_polynomial(q, sv);
    ASSERT_EQ(den.size(), 5u);
    ASSERT_EQ(P4.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(den[i], P4[4 - i]);
    EXPECT_EQ(P4[4], 1);
    EXPECT_EQ(P4[3], 0);
    if (q % 8 == 1) {
      EXPECT_EQ(P4, P({q * q - 4 * q * sv * sv, 8 * q * sv, -6 * q, 0, 1}));
    } else {
      EXPECT_EQ(P4, P({9 * q * q - 4 * q * sv * sv, 8 * q * sv, 2 * q, 0, 1}));
    }
  }
  expect_kind(ErrorKind::WrongResidueClass, [] { quartic_denominator(7, 1); });
}

TEST(Recurrence, FiveAtOne) {
  const auto ctx = FieldContext::build(5, 1);
  const auto report = recurrence_check(ctx, 1, 8);
  EXPECT_EQ(report.coefficients, (std::array<BigInt, 4>{0, -10, -40, -205}));
  EXPECT_EQ(report.residuals.size(), 4u);
  EXPECT_TRUE(report.holds());
}

TEST(Recurrence, CoefficientsForOneModEight) {
  const auto ctx = FieldContext::build(17, 1);
  const std::int64_t q = 17, s = ctx.quartic().s;
  EXPECT_EQ(recurrence_coefficients(q, s), (std::array<BigInt, 4>{0, 6 * q, -8 * q * s, -(q * q - 4 * q * s * s)}));
}

TEST(Recurrence, HoldsForEveryNonzeroC) {
  for (const auto& s : ref::kQ1Fields) {
    const auto ctx = ref::context(s);
    for (Code c = 1; c < ctx.q(); ++c) EXPECT_TRUE(recurrence_check(ctx, c, 10).holds()) << "q=" << ctx.q() << " c=" << c;
  }
}

TEST(Recurrence, Errors) {
  const auto q5 = FieldContext::build(5, 1);
  expect_kind(ErrorKind::ZeroRHS, [&] { recurrence_check(q5, 0, 8); });
  expect_kind(ErrorKind::InvalidArgument, [&] { recurrence_check(q5, 1, 4); });
  expect_kind(ErrorKind::WrongResidueClass, [] { recurrence_check(FieldContext::build(7, 1), 1, 8); });
}

TEST(Tables, CorrectionPolynomialsCarryNoConstantTerm) {
  for (const auto* table : {&kB1, &kB2})
    for (std::uint32_t r = 0; r < 4; ++r) {
      const auto poly = correction_polynomial(*table, r, 13, {-3, -1});
      ASSERT_EQ(poly.size(), 4u);
      EXPECT_EQ(poly[0], 0);
    }
}
