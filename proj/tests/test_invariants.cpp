#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "detloci/invariant_report.hpp"
#include "detloci/invariants.hpp"

using namespace detloci;

namespace {

// Reduced fraction p/q as a pair, q > 0.
std::pair<long, long> reduced(long p, long q) {
  long g = std::gcd(p, q);
  return {p / g, q / g};
}

std::set<std::pair<long, long>> as_pairs(const std::vector<Rational>& v) {
  std::set<std::pair<long, long>> out;
  for (const auto& r : v) out.emplace(r.numerator().convert_to<long>(), r.denominator().convert_to<long>());
  return out;
}

// Pole set for the square case from divisor data N_i = a-k+1-i, A_i = (a-i)^2.
std::set<std::pair<long, long>> pole_oracle(long a, long k) {
  std::set<std::pair<long, long>> out;
  for (long i = 0; i <= a - k; ++i) out.insert(reduced(-(a - i) * (a - i), a - k + 1 - i));
  return out;
}

}  // namespace

TEST(Lct, Examples) {
  EXPECT_EQ(lct(1, 3, 1), Rational(3));
  for (int a = 1; a <= 8; ++a) EXPECT_EQ(lct(a, a, 1), Rational(1));
  EXPECT_EQ(lct(2, 3, 1), Rational(2));
  // terms 9/2 (i = 0) and 4/1 (i = 1)
  EXPECT_EQ(lct(3, 3, 2), Rational(4));
  EXPECT_EQ(lct(2, 2, 2), Rational(4));
  EXPECT_THROW(lct(2, 3, 3), InputError);
  EXPECT_THROW(lct(3, 2, 1), InputError);
}

TEST(Lct, EqualsSmallestBFunctionRoot) {
  for (int b = 1; b <= 8; ++b)
    for (int a = 1; a <= b; ++a) {
      auto bf = b_function_det(a, b);
      Rational smallest = -bf.roots.front();
      for (const auto& r : bf.roots) smallest = std::min(smallest, -r);
      EXPECT_EQ(smallest, lct(a, b, 1));
      EXPECT_EQ(smallest, Rational(b - a + 1));
    }
}

TEST(BFunction, Examples) {
  EXPECT_EQ(b_function_det(2, 3).roots, (std::vector<Rational>{Rational(-2), Rational(-3)}));
  EXPECT_EQ(b_function_det(1, 1).roots, (std::vector<Rational>{Rational(-1)}));
  EXPECT_EQ(b_function_det(3, 3).roots, (std::vector<Rational>{Rational(-1), Rational(-2), Rational(-3)}));
  // (s+1)(s+2)(s+3) = s^3 + 6 s^2 + 11 s + 6
  EXPECT_EQ(b_function_det(3, 3).coefficients(),
            (std::vector<Rational>{Rational(6), Rational(11), Rational(6), Rational(1)}));
}

TEST(BFunction, RootsNegativeAndCountA) {
  for (int b = 1; b <= 8; ++b)
    for (int a = 1; a <= b; ++a) {
      auto bf = b_function_det(a, b);
      EXPECT_EQ(bf.roots.size(), static_cast<std::size_t>(a));
      for (const auto& r : bf.roots) EXPECT_LT(r, Rational(0));
    }
}

TEST(Zeta, Examples) {
  EXPECT_EQ(top_zeta_det(2, 1).poles, (std::vector<Rational>{Rational(-1), Rational(-2)}));
  EXPECT_EQ(top_zeta_det(2, 2).poles, (std::vector<Rational>{Rational(-4)}));
  EXPECT_EQ(top_zeta_det(1, 1).poles, (std::vector<Rational>{Rational(-1)}));
  try {
    top_zeta_det(2, 3, 1);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("zeta formula requires a=b"), std::string::npos);
  }
}

TEST(Zeta, PoleSetMatchesOracleAndHasNoRepeats) {
  for (int a = 1; a <= 8; ++a)
    for (int k = 1; k <= a; ++k) {
      auto poles = top_zeta_det(a, k).poles;
      EXPECT_EQ(as_pairs(poles), pole_oracle(a, k));
      EXPECT_EQ(as_pairs(poles).size(), poles.size());
      for (const auto& p : poles) EXPECT_LT(p, Rational(0));
    }
  // two indices give the same pole -9 for (6, 3): i = 3 gives -9/1, i = 0 gives -36/4
  EXPECT_EQ(top_zeta_det(6, 3).poles.size(), 3u);
}

TEST(Zeta, PolesBoundedByLctWithEquality) {
  for (int a = 1; a <= 6; ++a)
    for (int k = 1; k <= a; ++k) {
      auto l = lct(a, a, k);
      bool attained = false;
      for (const auto& p : top_zeta_det(a, k).poles) {
        EXPECT_GE(-p, l);
        attained = attained || -p == l;
      }
      EXPECT_TRUE(attained) << a << "," << k;
    }
}

TEST(EulerObstruction, Examples) {
  for (int a = 1; a <= 6; ++a) EXPECT_EQ(euler_obstruction(a, a + 1, a).value, 1);
  EXPECT_EQ(euler_obstruction(3, 3, 1).value, 3);
  EXPECT_EQ(euler_obstruction(2, 5, 1).value, 2);
}

TEST(EulerObstruction, BinomialRowSums) {
  for (int a = 1; a <= 10; ++a) {
    BigInt total = 1;  // k = 0 term, C(a, a)
    for (int k = 1; k <= a; ++k) total += euler_obstruction(a, a, k).value;
    EXPECT_EQ(total, BigInt(1) << a);
  }
}

TEST(EulerObstruction, StrataTable) {
  auto e = euler_obstruction(3, 4, 1);
  ASSERT_EQ(e.strata.size(), 3u);
  EXPECT_EQ(e.strata[0].t, 1);
  EXPECT_EQ(e.strata[0].dimension, 2 * 5);
  EXPECT_EQ(e.strata[2].dimension, 0);
}

TEST(Mld, Examples) {
  EXPECT_EQ(mld(2, 2, 1, MldTarget::AlongNextStratum), 2);
  EXPECT_EQ(mld(3, 3, 1, MldTarget::PointOnStratum, 2), 7);
  EXPECT_THROW(mld(2, 3, 1, MldTarget::AlongNextStratum), InputError);
  EXPECT_THROW(mld(3, 3, 2, MldTarget::PointOnStratum, 1), InputError);
  EXPECT_THROW(mld(3, 3, 2, MldTarget::PointOnStratum), InputError);
}

TEST(Mld, OpenStratumEqualsDimension) {
  for (int a = 1; a <= 8; ++a)
    for (int k = 1; k <= a; ++k)
      EXPECT_EQ(mld(a, a, k, MldTarget::PointOnStratum, k), stratum_dimension(GenericShape(a, a), k));
}

TEST(Monodromy, Examples) {
  auto c1 = monodromy_check(1);
  EXPECT_TRUE(c1.passed);
  EXPECT_EQ(c1.matches.size(), 1u);
  auto c2 = monodromy_check(2);
  EXPECT_TRUE(c2.passed);
  EXPECT_EQ(c2.matches.size(), 2u);
  auto c4 = monodromy_check(4);
  EXPECT_TRUE(c4.passed);
  EXPECT_EQ(c4.matches.size(), 4u);
  // b(s) Z(s) = prod (s+i) * prod i/(s+i) = a!
  EXPECT_EQ(c4.product_string(), "24");
}

TEST(Monodromy, PassesUpToEight) {
  for (int a = 1; a <= 8; ++a) {
    auto c = monodromy_check(a);
    EXPECT_TRUE(c.passed);
    for (const auto& m : c.matches) EXPECT_EQ(m.root, std::optional<Rational>(m.pole));
  }
}

TEST(Monodromy, FlagsOffendingPole) {
  ZetaFunction z{{Rational(-1), Rational(-5, 2)}};
  auto c = monodromy_check(2, b_function_det(2, 2), z);
  EXPECT_FALSE(c.passed);
  ASSERT_TRUE(c.offending_pole.has_value());
  EXPECT_EQ(*c.offending_pole, Rational(-5, 2));
}

TEST(InvariantReport, SquareCaseHasEverything) {
  auto r = invariant_report(3, 3, 1);
  EXPECT_EQ(r.dimension, 8);
  EXPECT_EQ(r.lct, Rational(1));
  EXPECT_TRUE(r.bfunction.has_value());
  EXPECT_TRUE(r.zeta.has_value());
  EXPECT_TRUE(r.mld.has_value());
  ASSERT_TRUE(r.monodromy.has_value());
  EXPECT_TRUE(r.monodromy->passed);
  EXPECT_EQ(r.checks.size(), 6u);
}

TEST(InvariantReport, NonSquareOmitsSquareOnlyData) {
  auto r = invariant_report(2, 3, 1);
  EXPECT_TRUE(r.bfunction.has_value());
  EXPECT_FALSE(r.zeta.has_value());
  EXPECT_FALSE(r.mld.has_value());
  EXPECT_FALSE(r.monodromy.has_value());
  auto r2 = invariant_report(2, 3, 2);
  EXPECT_FALSE(r2.bfunction.has_value());
  EXPECT_THROW(invariant_report(2, 3, 5), InputError);
}

TEST(InvariantReport, WholeGridPassesCrossChecks) {
  for (int b = 1; b <= 8; ++b)
    for (int a = 1; a <= b; ++a)
      for (int k = 1; k <= a; ++k) EXPECT_NO_THROW(invariant_report(a, b, k));
}
