#include "support/reference.hpp"

#include <gtest/gtest.h>

#include <random>

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

using Idx = std::vector<std::int64_t>;

std::int64_t brute_congruence(const Idx& a, std::int64_t b, std::int64_t r, std::int64_t range) {
  std::int64_t count = 0;
  Idx x(a.size(), 0);
  while (true) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * x[i];
    if (((sum - b) % r + r) % r == 0) ++count;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == range) x[i++] = 0;
    if (i == x.size()) break;
  }
  return count;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

TEST(Congruence, LinearExamples) {
  EXPECT_EQ(linear_congruence_count(Idx{2}, 2, 4), 2);
  EXPECT_EQ(linear_congruence_count(Idx{2}, 1, 4), 0);
  EXPECT_EQ(linear_congruence_count(Idx{3, 6}, 3, 12), 36);
  expect_kind(ErrorKind::ZeroCoefficient, [] { linear_congruence_count(Idx{0, 1}, 1, 4); });
  expect_kind(ErrorKind::InvalidArgument, [] { linear_congruence_count(Idx{1}, 1, 1); });
}

TEST(Congruence, LinearMatchesEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coef(-12, 12), rhs(-20, 20), mod(2, 12), len(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    Idx a(static_cast<std::size_t>(len(rng)));
    for (auto& v : a)
      do v = coef(rng);
      while (v == 0);
    const auto b = rhs(rng), r = mod(rng);
    EXPECT_EQ(linear_congruence_count(a, b, r), brute_congruence(a, b, r, r));
  }
}

TEST(Congruence, RestrictedExamples) {
  EXPECT_EQ(restricted_congruence_count(Idx{4}, 8, 4, 3), 1);
  expect_kind(ErrorKind::NotDivisible, [] { restricted_congruence_count(Idx{4}, 2, 4, 3); });
  EXPECT_EQ(restricted_congruence_count(Idx{4, 4}, 4, 4, 3), 3);
}

TEST(Congruence, RestrictedMatchesEnumeration) {
  for (std::int64_t k : {2, 4})
    for (std::int64_t f : {1, 2, 3, 6})
      for (const Idx& a : {Idx{4}, Idx{2, 6}, Idx{k, 3}, Idx{4, 4, 2}}) {
        const std::int64_t kf = k * f;
        std::int64_t d = kf;
        for (auto v : a) d = std::gcd(d, v);
        for (std::int64_t b = 0; b < 2 * kf; b += d)
          EXPECT_EQ(restricted_congruence_count(a, b, k, f), brute_congruence(a, b, kf, kf / d));
      }
}

TEST(Decomposition, Examples) {
  EXPECT_EQ(quartic_decomposition(Generator::find(Field::build(5, 1))), (QuarticDecomposition{1, -1}));
  EXPECT_EQ(quartic_decomposition(Generator::find(Field::build(13, 1))), (QuarticDecomposition{-3, -1}));
  EXPECT_EQ(quartic_decomposition(Generator::find(Field::build(3, 2))), (QuarticDecomposition{-3, 0}));
  expect_kind(ErrorKind::WrongResidueClass, [] { quartic_decomposition(Generator::find(Field::build(7, 1))); });
}

TEST(Decomposition, UniqueAndConsistentForEveryGenerator) {
  for (const auto& s : ref::kQ1Fields) {
    const Field F = Field::build(s.p, s.m);
    for (Code g : Generator::all(F)) {
      const auto dec = quartic_decomposition(Generator::from(F, g));
      const auto candidates = ref::decompositions(F, g);
      ASSERT_EQ(candidates.size(), 1u) << "q=" << F.q() << " g=" << g;
      EXPECT_EQ(dec.s, candidates[0].first);
      EXPECT_EQ(dec.t, candidates[0].second);
      EXPECT_EQ(dec.s * dec.s + 4 * dec.t * dec.t, static_cast<std::int64_t>(F.q()));
    }
  }
}

TEST(CyclotomicNumbers, EnumerationExamples) {
  const auto g13 = Generator::find(Field::build(13, 1));
  const auto g5 = Generator::find(Field::build(5, 1));
  const auto g17 = Generator::find(Field::build(17, 1));
  EXPECT_EQ(cyclotomic_number_enum(g13, 4, 0, 0), 0);
  EXPECT_EQ(cyclotomic_number_enum(g5, 4, 0, 0), 0);
  EXPECT_EQ(cyclotomic_number_enum(g17, 4, 1, 2), 1);
  expect_kind(ErrorKind::BadOrder, [&] { cyclotomic_number_enum(g13, 5, 0, 0); });
  expect_kind(ErrorKind::BadOrder, [] { cyclotomic_order(13, 0); });
}

TEST(CyclotomicNumbers, EnumerationMatchesReference) {
  for (const auto& s : ref::all_fields()) {
    const Field F = Field::build(s.p, s.m);
    const auto g = Generator::find(F);
    for (auto k : divisors_of(F.q() - 1)) {
      if (k > 12) continue;
      const auto table = CyclotomicTable::enumerate(g, k);
      for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < k; ++j) {
          ASSERT_EQ(table(i, j), ref::cyclotomic(F, g.element(), k, i, j));
          ASSERT_EQ(cyclotomic_number_enum(g, k, i, j), table(i, j));
        }
    }
  }
}

TEST(CyclotomicNumbers, ClosedFormExamples) {
  EXPECT_EQ(cyclotomic_number_quartic(0, 0, {-3, -1}, 13), 0);
  EXPECT_EQ(cyclotomic_number_quartic(0, 0, {1, 2}, 17), 0);
  EXPECT_EQ(cyclotomic_number_quartic(1, 2, {1, 2}, 17), 1);
  expect_kind(ErrorKind::NonIntegral, [] { cyclotomic_number_quartic(0, 1, {-3, 0}, 13); });
  expect_kind(ErrorKind::WrongResidueClass, [] { cyclotomic_number_quartic(0, 0, {1, 0}, 7); });
}

TEST(CyclotomicNumbers, ClosedFormMatchesReferenceForBothParities) {
  bool saw_even = false, saw_odd = false;
  for (const auto& s : ref::kQ1Fields) {
    const auto ctx = ref::context(s);
    const auto closed = CyclotomicTable::quartic(ctx.quartic(), ctx.q());
    (closed.order().f_even() ? saw_even : saw_odd) = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        EXPECT_EQ(closed(i, j), ref::cyclotomic(ctx.field(), ctx.generator().element(), 4, i, j)) << "q=" << ctx.q();
  }
  EXPECT_TRUE(saw_even);
  EXPECT_TRUE(saw_odd);
}

TEST(CyclotomicNumbers, WrongTIsDetected) {
  for (const auto& s : ref::kQ1Fields) {
    const auto ctx = ref::context(s);
    auto dec = ctx.quartic();
    dec.t += 1;
    expect_kind(ErrorKind::NonIntegral, [&] { CyclotomicTable::quartic(dec, ctx.q()); });
  }
}

TEST(CyclotomicNumbers, Symmetries) {
  for (const auto& s : ref::all_fields()) {
    const auto g = Generator::find(Field::build(s.p, s.m));
    const std::int64_t q = g.field().q();
    for (auto k : divisors_of(q - 1)) {
      if (k < 2 || k > 12) continue;
      const auto c = CyclotomicTable::enumerate(g, k);
      std::int64_t total = 0;
      for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < k; ++j) {
          total += c(i, j);
          EXPECT_EQ(c(i + k, j), c(i, j));
          EXPECT_EQ(c(i, j - 3 * k), c(i, j));
          EXPECT_EQ(c(-i, j - i), c(i, j));
          if (c.order().f_even()) {
            EXPECT_EQ(c(j, i), c(i, j));
          } else if (k % 2 == 0) {
            EXPECT_EQ(c(j + k / 2, i + k / 2), c(i, j));
          }
        }
      EXPECT_EQ(total, q - 2);
      EXPECT_EQ(c.total(), q - 2);
    }
  }
}

TEST(Dimension, EnumerationExamples) {
  const auto g13 = Generator::find(Field::build(13, 1));
  EXPECT_EQ(cyclo_dim_enum(g13, 4, Idx{0}), 1);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(cyclo_dim_enum(g13, 4, Idx{i}), 0);
  EXPECT_EQ(cyclo_dim_enum(g13, 4, Idx{0, 0}), 0);
  EXPECT_EQ(cyclo_dim_enum(g13, 4, Idx{1, 1, 1}), 3);
  EXPECT_EQ(cyclo_dim_enum(g13, 4, Idx{0, 0, 0, 0}), 12);
  expect_kind(ErrorKind::TooLarge, [&] { cyclo_dim_enum(g13, 4, Idx{0, 0, 0, 0}, 10.0); });
  expect_kind(ErrorKind::InvalidArgument, [&] { cyclo_dim_enum(g13, 4, Idx{}); });
}

TEST(Dimension, EnumerationMatchesReference) {
  for (const auto& s : ref::kQ1Fields) {
    const auto g = Generator::find(Field::build(s.p, s.m));
    if (g.field().q() > 29) continue;
    for (const Idx& idx : {Idx{2}, Idx{0, 1}, Idx{3, 3}, Idx{0, 1, 2}, Idx{2, 2, 2}, Idx{0, 0, 0, 0}, Idx{1, 3, 0, 2}})
      EXPECT_EQ(cyclo_dim_enum(g, 4, idx), ref::dimension(g.field(), g.element(), 4, idx)) << "q=" << g.field().q();
  }
}

TEST(Dimension, ReductionExamples) {
  const auto c13 = CyclotomicTable::quartic({-3, -1}, 13);
  const auto c17 = CyclotomicTable::quartic({1, 2}, 17);
  const auto c5 = CyclotomicTable::quartic({1, -1}, 5);
  EXPECT_EQ(cyclo_dim2(c13, 0, 0), c13(0, 0));
  EXPECT_EQ(cyclo_dim2(c13, 1, 1), 0);
  EXPECT_EQ(c13(0, 3), 0);
  EXPECT_EQ(cyclo_dim2(c17, 2, 2), 1);
  EXPECT_EQ(cyclo_dim3(c5, 0, 0, 0), 0);
  EXPECT_EQ(cyclo_dim3(c13, 1, 1, 1), 3);
  const auto g13 = Generator::find(Field::build(13, 1));
  EXPECT_EQ(cyclo_dim3(c13, 0, 1, 2), cyclo_dim_enum(g13, 4, Idx{0, 1, 2}));
  EXPECT_EQ(cyclo_dim4(c5, 0, 0, 0, 0), 0);
  EXPECT_EQ(cyclo_dim4(c13, 0, 0, 0, 0), 12);
  const auto g17 = Generator::find(Field::build(17, 1));
  EXPECT_EQ(cyclo_dim4(c17, 1, 1, 1, 1), cyclo_dim_enum(g17, 4, Idx{1, 1, 1, 1}));
  expect_kind(ErrorKind::InvalidArgument, [&] { cyclo_dim(c13, Idx{0, 0, 0, 0, 0}); });
}

TEST(Dimension, ReductionMatchesEnumerationForAllTuples) {
  for (const auto& s : ref::kQ1Fields) {
    const auto g = Generator::find(Field::build(s.p, s.m));
    const auto table = CyclotomicTable::enumerate(g, 4);
    for (std::size_t n = 1; n <= 4; ++n) {
      Idx idx(n, 0);
      while (true) {
        ASSERT_EQ(cyclo_dim(table, idx), cyclo_dim_enum(g, 4, idx)) << "q=" << g.field().q();
        std::size_t i = 0;
        while (i < n && ++idx[i] == 4) idx[i++] = 0;
        if (i == n) break;
      }
    }
  }
}

TEST(Dimension, ReductionForOtherOrders) {
  for (const auto& s : ref::all_fields()) {
    const auto g = Generator::find(Field::build(s.p, s.m));
    const std::int64_t q = g.field().q();
    for (std::int64_t k : {std::int64_t{2}, (q - 1) / 2}) {
      const auto table = CyclotomicTable::enumerate(g, k);
      for (const Idx& idx : {Idx{0, 0}, Idx{1, 0}, Idx{0, 1, 1}, Idx{1, 1, 1}, Idx{0, 0, 0, 0}, Idx{1, 0, 1, 1}, Idx{3, 2, 1, 0}})
        EXPECT_EQ(cyclo_dim(table, idx), cyclo_dim_enum(g, k, idx)) << "q=" << q << " k=" << k;
    }
  }
}

TEST(Dimension, ShiftInvariance) {
  const auto g = Generator::find(Field::build(29, 1));
  const auto table = CyclotomicTable::enumerate(g, 4);
  for (const Idx& idx : {Idx{0, 1}, Idx{1, 2, 3}, Idx{0, 1, 2, 3}}) {
    Idx shifted = idx;
    shifted[0] += 4;
    shifted.back() -= 8;
    EXPECT_EQ(cyclo_dim_enum(g, 4, shifted), cyclo_dim_enum(g, 4, idx));
    EXPECT_EQ(cyclo_dim(table, shifted), cyclo_dim(table, idx));
  }
}

TEST(Diagonal, Examples) {
  EXPECT_EQ(cyclo_diag_quartic(3, 1, {-3, -1}, 13), 3);
  EXPECT_EQ(cyclo_diag_quartic(4, 0, {1, -1}, 5), 0);
  EXPECT_EQ(cyclo_diag_quartic(2, 0, {1, 2}, 17), 0);
  expect_kind(ErrorKind::NonIntegral, [] { cyclo_diag_quartic(2, 1, {-3, 0}, 13); });
}

TEST(Diagonal, ClosedFormsMatchReference) {
  for (const auto& s : ref::kQ1Fields) {
    const auto ctx = ref::context(s);
    if (ctx.q() > 41) continue;
    for (int n = 1; n <= 4; ++n)
      for (int i = 0; i < 4; ++i) {
        const Idx idx(static_cast<std::size_t>(n), i);
        EXPECT_EQ(cyclo_diag_quartic(n, i, ctx.quartic(), ctx.q()),
                  ref::dimension(ctx.field(), ctx.generator().element(), 4, idx))
            << "q=" << ctx.q() << " n=" << n << " i=" << i;
      }
  }
}
