#include <gtest/gtest.h>

#include "detloci/blowup_tower.hpp"

using namespace detloci;

TEST(Tower, PointBlowup) {
  for (int b = 1; b <= 5; ++b) {
    auto t = resolve_tower(1, b, 1);
    ASSERT_EQ(t.records.size(), 1u);
    EXPECT_EQ(t.records[0].center_codim, b);
    EXPECT_EQ(t.records[0].multiplicity, 1);
    EXPECT_EQ(t.records[0].log_discrepancy, b);
    EXPECT_EQ(lct_from_tower(t), Rational(b));
  }
}

TEST(Tower, TwoByTwo) {
  auto t = resolve_tower(2, 2, 1);
  ASSERT_EQ(t.records.size(), 2u);
  EXPECT_EQ(t.records[0].center_codim, 4);
  EXPECT_EQ(t.records[0].multiplicity, 2);
  EXPECT_EQ(t.records[0].log_discrepancy, 4);
  EXPECT_EQ(t.records[1].center_codim, 1);
  EXPECT_EQ(t.records[1].multiplicity, 1);
  EXPECT_EQ(t.records[1].log_discrepancy, 1);
  EXPECT_EQ(lct_from_tower(t), Rational(1));
  EXPECT_EQ(zeta_poles_from_tower(t), (std::vector<Rational>{Rational(-1), Rational(-2)}));
}

TEST(Tower, TwoByThree) {
  auto t = resolve_tower(2, 3, 1);
  EXPECT_EQ(t.records[0].multiplicity, 2);
  EXPECT_EQ(t.records[0].log_discrepancy, 6);
  EXPECT_EQ(t.records[1].multiplicity, 1);
  EXPECT_EQ(t.records[1].log_discrepancy, 2);
  EXPECT_EQ(lct_from_tower(t), Rational(2));
  EXPECT_FALSE(t.zeta_poles.has_value());
  EXPECT_THROW(zeta_poles_from_tower(t), InputError);
}

TEST(Tower, ThreeByThreeKTwo) {
  // 9/2 from the first blowup, 4 from the second
  auto t = resolve_tower(3, 3, 2);
  EXPECT_EQ(t.records[0].ratio(), Rational(9, 2));
  EXPECT_EQ(t.records[1].ratio(), Rational(4));
  EXPECT_EQ(lct_from_tower(t), Rational(4));
  EXPECT_EQ(lct_from_tower(t), lct(3, 3, 2));
}

TEST(Tower, ZetaPolesExamples) {
  EXPECT_EQ(zeta_poles_from_tower(resolve_tower(1, 1, 1)), (std::vector<Rational>{Rational(-1)}));
  EXPECT_EQ(zeta_poles_from_tower(resolve_tower(3, 3, 1)),
            (std::vector<Rational>{Rational(-1), Rational(-2), Rational(-3)}));
}

TEST(Tower, LctAgreesWithClosedFormula) {
  for (int b = 1; b <= 6; ++b)
    for (int a = 1; a <= b; ++a)
      for (int k = 1; k <= a; ++k) EXPECT_EQ(lct_from_tower(resolve_tower(a, b, k)), lct(a, b, k));
}

TEST(Tower, ZetaAgreesWithClosedFormula) {
  for (int a = 1; a <= 6; ++a)
    for (int k = 1; k <= a; ++k) EXPECT_EQ(zeta_poles_from_tower(resolve_tower(a, a, k)), top_zeta_det(a, k).poles);
}

TEST(Tower, MultiplicitiesAndLastDivisor) {
  for (int b = 1; b <= 6; ++b)
    for (int a = 1; a <= b; ++a)
      for (int k = 1; k <= a; ++k) {
        auto t = resolve_tower(a, b, k);
        ASSERT_EQ(t.records.size(), static_cast<std::size_t>(a - k + 1));
        for (std::size_t i = 1; i < t.records.size(); ++i)
          EXPECT_LT(t.records[i].multiplicity, t.records[i - 1].multiplicity);
        const auto& last = t.records.back();
        EXPECT_EQ(last.multiplicity, 1);
        EXPECT_EQ(last.log_discrepancy, static_cast<long>(k) * (b - a + k));
        for (const auto& r : t.records) {
          EXPECT_GE(r.multiplicity, 1);
          EXPECT_GE(r.log_discrepancy, 1);
          EXPECT_GE(r.ratio(), lct(a, b, k));
          EXPECT_TRUE(r.log_discrepancy_derived);
        }
      }
}
