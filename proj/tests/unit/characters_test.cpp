#include <gtest/gtest.h>

#include "naive.hpp"
#include "quadcount/quadcount.hpp"

using namespace quadcount;

namespace {

struct CharF3 : ::testing::Test {
  FieldCtx F{3, 1};
  PolyRing R{F};
  Poly P(std::initializer_list<std::int64_t> c) { return R.from_ints(c); }
};

}  // namespace

TEST_F(CharF3, LaurentCoefficients) {
  EXPECT_EQ(laurent_coeff_of_ratio(R, P({1}), P({0, 1}), -1), F.one());
  EXPECT_EQ(laurent_coeff_of_ratio(R, P({1}), P({0, 0, 1}), -1), F.zero());
  EXPECT_EQ(laurent_coeff_of_ratio(R, P({1}), P({0, 0, 1}), -2), F.one());
  EXPECT_EQ(laurent_coeff_of_ratio(R, P({1, 1}), P({1, 0, 1}), -1), F.one());
  EXPECT_EQ(laurent_coeff_of_ratio(R, P({1, 1}), P({1, 0, 1}), -2), F.one());
  EXPECT_EQ(laurent_coeff_of_ratio(R, P({1, 1}), P({1, 0, 1}), -3), F.from_int(-1));
  EXPECT_THROW((void)laurent_coeff_of_ratio(R, P({1}), R.zero(), -1), std::domain_error);
}

TEST_F(CharF3, LaurentExpansionMultipliesBack) {
  // (t+1) * sum_{i=1..8} c_i t^{-i} agrees with t^2+1 up to order t^{-7}
  const Poly x = P({1, 1});
  const Poly r = P({1, 0, 1});
  std::vector<FqElem> c(9);
  for (int i = 1; i <= 8; ++i) c[i] = laurent_coeff_of_ratio(R, x, r, -i);
  for (int j = 1; j <= 6; ++j) {
    // coefficient of t^{-j} in r * expansion must vanish
    FqElem s = F.zero();
    for (std::size_t d = 0; d <= 2; ++d) {
      const int i = j + static_cast<int>(d);
      if (i <= 8) s = F.add(s, F.mul(r.coeff(d), c[i]));
    }
    EXPECT_TRUE(s.is_zero()) << j;
  }
  // t^0 coefficient of r * expansion reproduces x_0 (no polynomial part: deg x < deg r)
  EXPECT_EQ(F.add(F.mul(r.coeff(1), c[1]), F.mul(r.coeff(2), c[2])), x.coeff(0));
}

TEST_F(CharF3, PsiExamples) {
  EXPECT_EQ(psi_rational(R, P({1}), P({0, 1})), 1u);
  EXPECT_EQ(psi_rational(R, P({0, 1}), P({0, 1})), 0u);
  EXPECT_EQ(psi_rational(R, R.zero(), P({1, 1})), 0u);
}

TEST(Psi, WellDefinedOnResidues) {
  for (std::uint32_t q : {3u, 5u, 9u}) {
    FieldCtx F = FieldCtx::from_order(q);
    PolyRing R(F);
    for (const Poly& r : naive::monic_up_to(R, 2)) {
      if (r.is_constant()) continue;
      for (const Poly& x : R.below_degree(r.degree().value())) {
        for (const Poly& m : naive::all_below(R, 2)) {
          EXPECT_EQ(psi_rational(R, R.add(x, R.mul(m, r)), r), psi_rational(R, x, r));
        }
      }
    }
  }
}

TEST(Psi, FunctionalMatchesLongDivision) {
  for (std::uint32_t q : {3u, 5u, 9u}) {
    FieldCtx F = FieldCtx::from_order(q);
    PolyRing R(F);
    for (const Poly& r : naive::monic_up_to(R, 2)) {
      PsiFunctional fn(R, r, 3);
      for (const Poly& x : naive::all_below(R, q == 3 ? 4 : 3)) {
        const auto expect = F.trace(laurent_coeff_of_ratio(R, x, r, -1));
        EXPECT_EQ(fn(x), expect);
        EXPECT_EQ(psi_rational(R, x, r), expect);
      }
      // a non-monic modulus with the same ideal
      const Poly r2 = R.scale(r, F.from_int(2));
      for (const Poly& x : naive::all_below(R, 2)) {
        EXPECT_EQ(psi_rational(R, x, r2), F.trace(laurent_coeff_of_ratio(R, x, r2, -1)));
      }
    }
  }
}

TEST(Psi, Additive) {
  FieldCtx F(5, 1);
  PolyRing R(F);
  for (const Poly& r : naive::monic_up_to(R, 2)) {
    const auto xs = naive::all_below(R, 2);
    for (const Poly& x : xs) {
      for (const Poly& y : xs) {
        EXPECT_EQ(psi_rational(R, R.add(x, y), r), (psi_rational(R, x, r) + psi_rational(R, y, r)) % F.p());
      }
    }
  }
}

TEST_F(CharF3, TailTimesPolynomial) {
  LaurentTail zero;
  EXPECT_EQ(psi_tail_times(F, zero, P({1, 2, 1})), 0u);
  LaurentTail a;
  a.set(1, F.one());
  EXPECT_EQ(psi_tail_times(F, a, P({1})), 1u);
  LaurentTail b;
  b.set(2, F.one());
  EXPECT_EQ(psi_tail_times(F, b, P({0, 1})), 1u);
  EXPECT_EQ(psi_tail_times(F, b, P({1})), 0u);
}

TEST_F(CharF3, TailStorage) {
  LaurentTail t;
  t.set(3, F.from_int(2));
  t.set(1, F.one());
  EXPECT_EQ(t.depth(), 3u);
  EXPECT_EQ(t.order(), 1u);
  t.set(1, F.zero());
  EXPECT_EQ(t.order(), 3u);
  EXPECT_EQ(t.entries().size(), 1u);
  t.set(3, F.zero());
  EXPECT_TRUE(t.is_zero());
  EXPECT_EQ(t, LaurentTail{});
}

TEST_F(CharF3, PsiIgnoresDeepTailEntries) {
  // psi(theta v) only sees the t^{-1} coefficient of theta v; tails differing at
  // depth > deg v + 1 give the same value
  for (const Poly& v : naive::all_below(R, 2)) {
    for (FqElem c1 : F.elements()) {
      for (FqElem c2 : F.elements()) {
        LaurentTail a;
        a.set(1, c1);
        a.set(2, c2);
        LaurentTail b = a;
        b.set(3, F.one());
        b.set(5, F.from_int(2));
        EXPECT_EQ(psi_tail_times(F, a, v), psi_tail_times(F, b, v));
      }
    }
  }
}

TEST_F(CharF3, HaarConstant) {
  const auto one = [&](const LaurentTail&) { return CycInt::from_integer(3, 1); };
  EXPECT_EQ(haar_integral(F, -2, 0, one).to_rational(), Rational(BigInt(1), BigInt(9)));
  EXPECT_EQ(haar_integral(F, -2, 4, one).to_rational(), Rational(BigInt(1), BigInt(9)));
  EXPECT_EQ(haar_integral(F, 0, 3, one).to_rational(), Rational(1));
}

TEST(Haar, Orthogonality) {
  for (std::uint32_t q : {3u, 5u}) {
    FieldCtx F = FieldCtx::from_order(q);
    PolyRing R(F);
    const std::size_t maxdeg = q == 3 ? 4 : 2;
    for (const Poly& x : naive::all_below(R, maxdeg + 1)) {
      const auto integrand = [&](const LaurentTail& tail) {
        return CycInt::from_exponent(F.p(), psi_tail_times(F, tail, x));
      };
      const std::int64_t D = x.is_zero() ? 0 : static_cast<std::int64_t>(x.degree().value()) + 1;
      for (std::int64_t m = 0; m <= 3; ++m) {
        const auto v = haar_integral(F, -m, D, integrand).to_rational();
        ASSERT_TRUE(v.has_value());
        const Rational expected = x.degree().below(static_cast<std::size_t>(m)) ? rpow(q, -m) : Rational(0);
        EXPECT_EQ(*v, expected) << "q=" << q << " x=" << R.to_string(x) << " m=" << m;
      }
      // the unit ball picks out x = 0
      EXPECT_EQ(*haar_integral(F, 0, D, integrand).to_rational(), x.is_zero() ? Rational(1) : Rational(0));
    }
  }
}

TEST(Haar, RejectsPositiveRadius) {
  FieldCtx F(3, 1);
  const auto one = [](const LaurentTail&) { return CycInt::from_integer(3, 1); };
  EXPECT_THROW((void)haar_integral(F, 1, 2, one), std::invalid_argument);
}
