#include <gtest/gtest.h>

#include "detloci/determinantal.hpp"
#include "detloci/parse.hpp"
#include "detloci/random.hpp"

using namespace detloci;

namespace {

BigInt power(long q, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= q;
  return r;
}

// Rank-j count via a Gaussian binomial: choose the j-dimensional row space
// inside F_q^a, then a surjection F_q^b -> that space.
BigInt rank_exactly_oracle(long a, long b, long j, long q) {
  BigInt num = 1, den = 1;
  for (long i = 0; i < j; ++i) {
    num *= power(q, a - i) - 1;
    den *= power(q, i + 1) - 1;
  }
  BigInt surj = 1;
  for (long i = 0; i < j; ++i) surj *= power(q, b) - power(q, i);
  return num / den * surj;
}

}  // namespace

TEST(GenericShape, NormalizesAndValidates) {
  GenericShape s(3, 2);
  EXPECT_EQ(s.a(), 2);
  EXPECT_EQ(s.b(), 3);
  EXPECT_THROW(GenericShape(0, 2), InputError);
}

TEST(DeterminantalIdeal, Examples) {
  auto j = determinantal_ideal<Rational>(GenericShape(2, 2), 1);
  ASSERT_EQ(j.generators.size(), 1u);
  auto ring = j.generators.front().ring();
  EXPECT_EQ(j.generators.front(), parse_polynomial(ring, "x11*x22 - x12*x21"));

  auto point = determinantal_ideal<Rational>(GenericShape(1, 3), 1);
  ASSERT_EQ(point.generators.size(), 3u);
  auto r3 = point.generators.front().ring();
  EXPECT_EQ(point.generators[0], parse_polynomial(r3, "x11"));
  EXPECT_EQ(point.generators[1], parse_polynomial(r3, "x21"));
  EXPECT_EQ(point.generators[2], parse_polynomial(r3, "x31"));

  auto unit = determinantal_ideal<Rational>(GenericShape(2, 3), 3);
  ASSERT_EQ(unit.generators.size(), 1u);
  EXPECT_TRUE(unit.generators.front().is_constant());
  EXPECT_EQ(unit.generators.front().constant_term(), Rational(1));

  EXPECT_TRUE(determinantal_ideal<Rational>(GenericShape(2, 3), 0).generators.empty());
}

TEST(DeterminantalIdeal, GeneratorCountMatchesBinomialProduct) {
  for (int b = 1; b <= 6; ++b)
    for (int a = 1; a <= b; ++a)
      for (int k = 1; k <= a; ++k) {
        GenericShape shape(a, b);
        if (determinantal_generator_count(shape, k) > 2000) continue;
        auto j = determinantal_ideal<Fp>(shape, k, prime_context());
        EXPECT_EQ(BigInt(j.generators.size()), determinantal_generator_count(shape, k)) << a << "," << b << "," << k;
      }
}

TEST(DeterminantalIdeal, VanishesExactlyOnLowRankMatrices) {
  Rng rng(17);
  auto ctx = prime_context(5);
  for (int trial = 0; trial < 500; ++trial) {
    int b = static_cast<int>(uniform(rng, 1, 4)), a = static_cast<int>(uniform(rng, 1, b));
    int k = static_cast<int>(uniform(rng, 1, a));
    GenericShape shape(a, b);
    auto j = determinantal_ideal<Fp>(shape, k, ctx);
    // random low-rank-biased matrix: product of b x t and t x a factors
    int t = static_cast<int>(uniform(rng, 0, a));
    DenseMatrix<Fp> left(b, t, ctx), right(t, a, ctx);
    for (int i = 0; i < b; ++i)
      for (int c = 0; c < t; ++c) left(i, c) = Fp(ctx, uniform(rng, 0, 4));
    for (int i = 0; i < t; ++i)
      for (int c = 0; c < a; ++c) right(i, c) = Fp(ctx, uniform(rng, 0, 4));
    DenseMatrix<Fp> m = t == 0 ? DenseMatrix<Fp>(b, a, ctx) : left * right;
    std::vector<Fp> point = m.data();
    bool all_vanish = true;
    for (const auto& g : j.generators) all_vanish = all_vanish && g.evaluate(point).is_zero();
    EXPECT_EQ(all_vanish, static_cast<int>(m.rank()) <= a - k);
  }
}

TEST(Strata, DimensionExamples) {
  EXPECT_EQ(stratum_dimension(GenericShape(2, 2), 2), 0);
  EXPECT_EQ(stratum_dimension(GenericShape(2, 3), 1), 4);
  EXPECT_EQ(stratum_dimension(GenericShape(3, 3), 1), 8);
  EXPECT_EQ(stratum_codimension(GenericShape(3, 3), 1), 1);
  EXPECT_THROW(stratum_dimension(GenericShape(2, 3), 3), InputError);
  EXPECT_THROW(stratum_dimension(GenericShape(2, 3), 0), InputError);
}

TEST(Strata, SingularLocusExamples) {
  auto s = singular_locus_index(GenericShape(2, 2), 1);
  EXPECT_EQ(s.index, 2);
  EXPECT_FALSE(s.empty);
  s = singular_locus_index(GenericShape(3, 5), 3);
  EXPECT_EQ(s.index, 4);
  EXPECT_TRUE(s.empty);
  EXPECT_EQ(singular_locus_index(GenericShape(4, 4), 2).index, 3);
}

TEST(PointCount, Examples) {
  EXPECT_EQ(count_points_rank_le(GenericShape(2, 2), 1, 2), 10);
  EXPECT_EQ(count_points_rank_le(GenericShape(1, 2), 0, 3), 1);
  EXPECT_EQ(count_points_brute_force(GenericShape(2, 2), 1, 2), 10);
  EXPECT_EQ(count_points_brute_force(GenericShape(2, 2), 2, 2), 16);
  EXPECT_EQ(count_points_brute_force(GenericShape(2, 3), 1, 2), 22);
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 4; ++b) EXPECT_EQ(count_points_rank_le(GenericShape(a, b), a, 2), power(2, a * b));
}

TEST(PointCount, ClosedFormMatchesGaussianBinomialOracle) {
  for (long q : {2L, 3L, 5L, 7L, 101L})
    for (int b = 1; b <= 5; ++b)
      for (int a = 1; a <= b; ++a)
        for (int j = 0; j <= a; ++j)
          EXPECT_EQ(count_points_rank_eq(GenericShape(a, b), j, q), rank_exactly_oracle(a, b, j, q));
}

TEST(PointCount, ClosedFormMatchesBruteForce) {
  for (int b = 1; b <= 9; ++b)
    for (int a = 1; a <= b && a * b <= 9; ++a)
      for (long q : {2L, 3L})
        for (int r = 0; r <= a; ++r)
          EXPECT_EQ(count_points_rank_le(GenericShape(a, b), r, q), count_points_brute_force(GenericShape(a, b), r, q));
}

TEST(PointCount, Guards) {
  EXPECT_THROW(count_points_brute_force(GenericShape(3, 3), 1, 5), InputError);
  EXPECT_THROW(count_points_rank_le(GenericShape(2, 2), 3, 2), InputError);
  EXPECT_THROW(count_points_rank_le(GenericShape(2, 2), 1, 4), InputError);
}

TEST(PointCount, InterpolatedDegreeIsStratumDimension) {
  for (int b = 1; b <= 4; ++b)
    for (int a = 1; a <= b; ++a)
      for (int k = 1; k <= a; ++k) {
        GenericShape shape(a, b);
        auto coeffs = rank_count_polynomial(shape, a - k);
        EXPECT_EQ(polynomial_degree(coeffs), stratum_dimension(shape, k));
        // leading coefficient: number of components (M_k is irreducible)
        EXPECT_EQ(coeffs[static_cast<std::size_t>(polynomial_degree(coeffs))], Rational(1));
        // interpolation reproduces the count at an unused prime
        Rational at(0), q(101);
        for (std::size_t d = coeffs.size(); d-- > 0;) at = at * q + coeffs[d];
        EXPECT_EQ(at, Rational(count_points_rank_le(shape, a - k, 101)));
      }
}
