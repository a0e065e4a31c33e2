#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "naive.hpp"
#include "quadcount/quadcount.hpp"

using namespace quadcount;

namespace {

struct F3Ring : ::testing::Test {
  FieldCtx F{3, 1};
  PolyRing R{F};
  Poly P(std::initializer_list<std::int64_t> c) { return R.from_ints(c); }
};

}  // namespace

TEST_F(F3Ring, ZeroHasMinusInfiniteDegree) {
  EXPECT_TRUE(R.zero().degree().is_minus_infinity());
  EXPECT_TRUE(R.zero().degree().below(0));
  EXPECT_LT(R.zero().degree(), Degree(0));
  EXPECT_EQ(R.abs(R.zero()), 0);
  EXPECT_THROW((void)R.zero().degree().value(), std::domain_error);
  EXPECT_EQ(P({1, 2, 0, 0}), P({1, 2}));
}

TEST_F(F3Ring, Arithmetic) {
  EXPECT_EQ(R.mul(P({1, 1}), P({2, 1})), P({2, 0, 1}));
  auto [q1, r1] = R.divmod(P({0, 0, 1}), P({0, 1}));
  EXPECT_EQ(q1, P({0, 1}));
  EXPECT_TRUE(r1.is_zero());
  auto [q2, r2] = R.divmod(P({1, 0, 1}), P({1, 1}));
  EXPECT_EQ(q2, P({2, 1}));
  EXPECT_EQ(r2, P({2}));
  EXPECT_THROW((void)R.divmod(P({1}), R.zero()), std::domain_error);
  EXPECT_EQ(R.to_string(P({0, 2, 1})), "t^2+2t");
}

TEST_F(F3Ring, DivmodReconstructs) {
  for (const Poly& a : naive::all_below(R, 4)) {
    for (const Poly& b : naive::all_below(R, 3)) {
      if (b.is_zero()) continue;
      auto [qq, rr] = R.divmod(a, b);
      EXPECT_EQ(R.add(R.mul(qq, b), rr), a);
      EXPECT_LT(rr.degree(), b.degree());
    }
  }
}

TEST_F(F3Ring, AbsoluteValueIsMultiplicativeAndUltrametric) {
  const auto polys = naive::all_below(R, 4);
  for (const Poly& a : polys) {
    for (const Poly& b : polys) {
      EXPECT_EQ(R.abs(R.mul(a, b)), R.abs(a) * R.abs(b));
      EXPECT_LE(R.abs(R.add(a, b)), std::max(R.abs(a), R.abs(b)));
    }
  }
}

TEST_F(F3Ring, Gcd) {
  EXPECT_EQ(R.gcd(P({0, 0, 1}), P({0, 1})), P({0, 1}));
  EXPECT_EQ(R.gcd(P({1, 1}), P({2, 1})), R.one());
  EXPECT_EQ(R.gcd(P({2, 2}), P({1, 1})), P({1, 1}));
  EXPECT_EQ(R.gcd(P({2, 2}), R.zero()), P({1, 1}));
  EXPECT_THROW((void)R.gcd(R.zero(), R.zero()), std::domain_error);
}

TEST_F(F3Ring, FactorizeExamples) {
  auto f1 = R.factorize(P({0, 0, 1}));
  EXPECT_EQ(f1.unit, F.one());
  ASSERT_EQ(f1.factors.size(), 1u);
  EXPECT_EQ(f1.factors[0], std::make_pair(P({0, 1}), 2u));

  EXPECT_TRUE(R.is_irreducible(P({1, 0, 1})));
  auto f3 = R.factorize(P({2, 0, 1}));
  ASSERT_EQ(f3.factors.size(), 2u);
  EXPECT_EQ(f3.factors[0].first, P({1, 1}));
  EXPECT_EQ(f3.factors[1].first, P({2, 1}));
  EXPECT_THROW((void)R.factorize(R.zero()), std::domain_error);
}

TEST(Factorize, RoundTripAndIrreducibility) {
  for (std::uint32_t q : {3u, 5u, 9u}) {
    FieldCtx F = FieldCtx::from_order(q);
    PolyRing R(F);
    const std::size_t maxdeg = q == 3 ? 5 : 3;
    for (const Poly& r : naive::monic_up_to(R, maxdeg)) {
      for (FqElem u : {F.one(), F.from_int(2)}) {
        const Poly x = R.scale(r, u);
        const auto fac = R.factorize(x);
        Poly back = R.constant(fac.unit);
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
          const auto& [w, k] = fac.factors[i];
          EXPECT_TRUE(R.is_monic(w));
          EXPECT_TRUE(naive::irreducible(R, w)) << R.to_string(w);
          if (i > 0) EXPECT_LT(fac.factors[i - 1].first, w);  // canonical and distinct
          back = R.mul(back, R.pow(w, k));
        }
        EXPECT_EQ(back, x) << "q=" << q << " r=" << R.to_string(x);
      }
      if (!r.is_constant()) EXPECT_EQ(R.is_irreducible(r), naive::irreducible(R, r));
    }
  }
}

TEST(Factorize, HighMultiplicityInCharacteristicThree) {
  FieldCtx F(3, 2);
  PolyRing R(F);
  const Poly a = R.from_ints({1, 1});
  const Poly b = R.from_ints({1, 0, 1});
  const Poly x = R.mul(R.pow(a, 7), R.pow(b, 3));  // exponents through p-th roots
  const auto fac = R.factorize(x);
  Poly back = R.one();
  for (const auto& [w, k] : fac.factors) back = R.mul(back, R.pow(w, k));
  EXPECT_EQ(back, x);
}

TEST(EulerPhi, MatchesUnitCount) {
  for (std::uint32_t q : {3u, 5u}) {
    FieldCtx F = FieldCtx::from_order(q);
    PolyRing R(F);
    for (const Poly& r : naive::monic_up_to(R, 3)) EXPECT_EQ(R.euler_phi(r), naive::unit_count(R, r));
  }
  FieldCtx F(3, 1);
  PolyRing R(F);
  EXPECT_EQ(R.euler_phi(R.one()), 1);
  EXPECT_EQ(R.euler_phi(R.t()), 2);
  EXPECT_EQ(R.euler_phi(R.pow(R.t(), 2)), 6);
  EXPECT_THROW((void)R.euler_phi(R.zero()), std::domain_error);
}

TEST(Moebius, ValuesAndDegreeSums) {
  for (std::uint32_t q : {3u, 5u}) {
    FieldCtx F = FieldCtx::from_order(q);
    PolyRing R(F);
    EXPECT_EQ(R.moebius(R.one()), 1);
    EXPECT_EQ(R.moebius(R.pow(R.t(), 2)), 0);
    for (std::size_t d = 0; d <= 3; ++d) {
      int s = 0;
      for (const Poly& r : R.monic_of_degree(d)) s += R.moebius(r);
      EXPECT_EQ(s, d == 0 ? 1 : d == 1 ? -static_cast<int>(q) : 0) << "q=" << q << " d=" << d;
    }
  }
}

TEST_F(F3Ring, JacobiExamples) {
  EXPECT_EQ(R.jacobi_symbol(R.one(), P({1, 0, 1})), 1);
  EXPECT_EQ(R.jacobi_symbol(P({2}), R.t()), -1);
  EXPECT_EQ(R.jacobi_symbol(P({2}), P({0, 0, 1})), 1);
  EXPECT_EQ(R.jacobi_symbol(R.t(), P({0, 0, 1})), 0);
  EXPECT_THROW((void)R.jacobi_symbol(R.one(), P({2, 2})), std::invalid_argument);
  EXPECT_THROW((void)R.jacobi_symbol(R.one(), R.one()), std::invalid_argument);
}

TEST_F(F3Ring, LegendreIsSquareIndicator) {
  for (std::size_t d = 1; d <= 2; ++d) {
    for (const Poly& w : R.monic_of_degree(d)) {
      if (!naive::irreducible(R, w)) continue;
      std::set<Poly> squares;
      for (const Poly& x : R.below_degree(d)) {
        if (!x.is_zero()) squares.insert(R.mod(R.mul(x, x), w));
      }
      for (const Poly& a : R.below_degree(d)) {
        const int expected = a.is_zero() ? 0 : squares.count(a) ? 1 : -1;
        EXPECT_EQ(R.jacobi_symbol(a, w), expected);
      }
    }
  }
}

TEST(Jacobi, MultiplicativeAndConstantRule) {
  FieldCtx F(5, 1);
  PolyRing R(F);
  const auto moduli = naive::monic_up_to(R, 2);
  const auto nums = naive::all_below(R, 2);
  for (const Poly& r : moduli) {
    if (r.is_constant()) continue;
    for (const Poly& a : nums) {
      const int ja = R.jacobi_symbol(a, r);
      EXPECT_EQ(ja == 0, a.is_zero() || R.gcd(a, r) != R.one());
      for (const Poly& b : nums) EXPECT_EQ(R.jacobi_symbol(R.mul(a, b), r), ja * R.jacobi_symbol(b, r));
    }
    for (const Poly& s : moduli) {
      if (s.is_constant()) continue;
      for (const Poly& a : nums) {
        EXPECT_EQ(R.jacobi_symbol(a, R.mul(r, s)), R.jacobi_symbol(a, r) * R.jacobi_symbol(a, s));
      }
    }
    for (FqElem c : F.elements()) {
      if (c.is_zero()) continue;
      const int base = F.is_square_unit(c) ? 1 : -1;
      const int expected = r.degree().value() % 2 == 0 ? 1 : base;
      EXPECT_EQ(R.jacobi_symbol(R.constant(c), r), expected);
    }
  }
}

TEST_F(F3Ring, SquareRoot) {
  EXPECT_EQ(R.square_root(P({0, 0, 1})), P({0, 1}));
  EXPECT_FALSE(R.square_root(P({0, 0, 0, 1})).has_value());
  EXPECT_EQ(R.square_root(P({1, 0, 1, 0, 1})), P({2, 0, 1}));
  EXPECT_FALSE(R.square_root(P({2})).has_value());  // 2 is not a square in F_3
  EXPECT_THROW((void)R.square_root(R.zero()), std::domain_error);
  for (const Poly& s : naive::monic_up_to(R, 3)) {
    const Poly r = R.mul(s, s);
    EXPECT_EQ(R.square_root(r), s);
  }
}

TEST_F(F3Ring, EnumerateMonic) {
  std::vector<Poly> d0(R.monic_of_degree(0).begin(), R.monic_of_degree(0).end());
  EXPECT_EQ(d0, std::vector<Poly>{R.one()});
  std::vector<Poly> d1(R.monic_of_degree(1).begin(), R.monic_of_degree(1).end());
  EXPECT_EQ(d1, (std::vector<Poly>{P({0, 1}), P({1, 1}), P({2, 1})}));
  std::vector<Poly> d2(R.monic_of_degree(2).begin(), R.monic_of_degree(2).end());
  EXPECT_EQ(d2.size(), 9u);
  EXPECT_TRUE(std::is_sorted(d2.begin(), d2.end()));
  for (std::size_t i = 0; i < d2.size(); ++i) EXPECT_EQ(R.index_of(d2[i], 2), i);
}
