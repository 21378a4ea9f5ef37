#include <gtest/gtest.h>

#include <random>

#include "detloci/minors.hpp"
#include "detloci/parse.hpp"
#include "detloci/poly_matrix.hpp"
#include "detloci/random.hpp"

using namespace detloci;

namespace {

using P = Polynomial<Rational>;

RingPtr<Rational> xy() { return make_ring<Rational>({"x", "y"}); }

P parse(const RingPtr<Rational>& r, const std::string& s) { return parse_polynomial(r, s); }

// Leibniz expansion over all permutations, independent of the Laplace engine.
template <class T>
T leibniz(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Polynomial, EvaluateExamples) {
  auto r = xy();
  std::vector<Rational> p23{Rational(2), Rational(3)}, p39{Rational(3), Rational(9)};
  EXPECT_EQ(parse(r, "x*y").evaluate(p23), Rational(6));
  EXPECT_EQ(P::constant(r, 5).evaluate(p23), Rational(5));
  EXPECT_EQ(parse(r, "x^2 - y").evaluate(p39), Rational(0));
  std::vector<Rational> bad{Rational(1)};
  EXPECT_THROW(parse(r, "x").evaluate(bad), InputError);
}

TEST(Polynomial, TruncateExamples) {
  auto r = xy();
  EXPECT_EQ(parse(r, "1 + x + x^3").truncated(3), parse(r, "1 + x"));
  EXPECT_TRUE(P(r).truncated(5).is_zero());
  EXPECT_EQ(parse(r, "x*y + x^2*y^2").truncated(4), parse(r, "x*y"));
}

TEST(Polynomial, NoZeroCoefficientsStored) {
  auto r = xy();
  auto p = parse(r, "x + y") - parse(r, "x");
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).term_count(), 0u);
}

TEST(Polynomial, GradedLexTermOrder) {
  auto r = xy();
  EXPECT_EQ(parse(r, "1 + y + x + y^2 + x*y + x^2").to_string(), "x^2 + x*y + y^2 + x + y + 1");
  EXPECT_EQ(parse(r, "-3/2*x*y^2 + 7").to_string(), "-3/2*x*y^2 + 7");
}

TEST(Polynomial, ParserRoundTripAndErrors) {
  auto r = xy();
  auto p = parse(r, "(x + 2*y)^3 - x/2");
  EXPECT_EQ(parse(r, p.to_string()), p);
  EXPECT_THROW(parse(r, "x + z"), InputError);
  EXPECT_THROW(parse(r, "x +"), InputError);
  EXPECT_THROW(parse(r, "(x"), InputError);
}

TEST(Polynomial, RingAxiomsOnRandomPolynomials) {
  Rng rng(11);
  auto r = make_ring<Rational>(numbered_vars("x", 3));
  for (int t = 0; t < 100; ++t) {
    auto a = random_polynomial(rng, r, 3, 4), b = random_polynomial(rng, r, 3, 4), c = random_polynomial(rng, r, 3, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    // evaluation is a ring homomorphism
    std::vector<Rational> pt{Rational(t % 5 - 2), Rational(1, 1 + t % 3), Rational(3)};
    EXPECT_EQ((a * b + c).evaluate(pt), a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
  }
}

TEST(Polynomial, MultiplyWithDegreeBoundEqualsTruncatedProduct) {
  Rng rng(12);
  auto r = make_ring<Rational>(numbered_vars("x", 2));
  for (int t = 0; t < 50; ++t) {
    auto a = random_polynomial(rng, r, 3, 4), b = random_polynomial(rng, r, 3, 4);
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(P::multiply(a, b, n), (a * b).truncated(n));
  }
}

TEST(Polynomial, SubstituteMatchesEvaluation) {
  auto r = xy();
  auto p = parse(r, "x^2*y - 3*y + 1");
  std::vector<P> images{parse(r, "x + y"), parse(r, "x*y")};
  auto q = p.substitute(images);
  std::vector<Rational> pt{Rational(2), Rational(-1, 2)};
  std::vector<Rational> img{images[0].evaluate(pt), images[1].evaluate(pt)};
  EXPECT_EQ(q.evaluate(pt), p.evaluate(img));
}

TEST(Polynomial, DifferentRingsRejected) {
  auto a = parse(xy(), "x");
  auto b = P::variable(make_ring<Rational>({"u", "v"}), 0);
  EXPECT_THROW(a + b, InputError);
}

TEST(Minors, SizeConventions) {
  for (std::size_t rows = 1; rows <= 4; ++rows)
    for (std::size_t cols = 1; cols <= 4; ++cols) {
      auto r = make_ring<Rational>(numbered_vars("x", rows * cols));
      std::vector<P> e;
      for (std::size_t v = 0; v < rows * cols; ++v) e.push_back(P::variable(r, v));
      PolyMatrix<Rational> m(r, rows, cols, e);
      for (int size : {-2, -1, 0}) {
        auto g = minors_of_size(m, size);
        ASSERT_EQ(g.size(), 1u);
        EXPECT_EQ(g.front(), P::constant(r, 1));
      }
      EXPECT_TRUE(minors_of_size(m, static_cast<int>(std::min(rows, cols)) + 1).empty());
    }
}

TEST(Minors, GenericTwoByTwo) {
  auto r = make_ring<Rational>({"x11", "x12", "x21", "x22"});
  PolyMatrix<Rational> m(r, 2, 2, {P::variable(r, 0), P::variable(r, 1), P::variable(r, 2), P::variable(r, 3)});
  auto d = minors_of_size(m, 2);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.front(), parse_polynomial(r, "x11*x22 - x12*x21"));
  EXPECT_TRUE(minors_of_size(m, 3).empty());
}

TEST(Minors, LexicographicRowThenColumnOrder) {
  auto r = make_ring<Rational>(numbered_vars("x", 6));
  std::vector<P> e;
  for (std::size_t v = 0; v < 6; ++v) e.push_back(P::variable(r, v));
  PolyMatrix<Rational> m(r, 3, 2, e);  // rows (x1 x2), (x3 x4), (x5 x6)
  auto g = minors_of_size(m, 1);
  ASSERT_EQ(g.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(g[i], P::variable(r, i));
  auto g2 = minors_of_size(m, 2);
  ASSERT_EQ(g2.size(), 3u);
  EXPECT_EQ(g2[0], parse_polynomial(r, "x1*x4 - x2*x3"));
  EXPECT_EQ(g2[1], parse_polynomial(r, "x1*x6 - x2*x5"));
  EXPECT_EQ(g2[2], parse_polynomial(r, "x3*x6 - x4*x5"));
}

TEST(Minors, EvaluateThenMinorEqualsMinorThenEvaluate) {
  Rng rng(5);
  auto r = make_ring<Rational>(numbered_vars("x", 3));
  for (int t = 0; t < 10; ++t) {
    std::size_t rows = 1 + t % 3, cols = 1 + (t / 3) % 3;
    PolyMatrix<Rational> m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_polynomial(rng, r, 2, 3);
    for (int size = 1; size <= static_cast<int>(std::min(rows, cols)); ++size) {
      auto symbolic = minors_of_size(m, size);
      for (int p = 0; p < 50; ++p) {
        std::vector<Rational> pt;
        for (int v = 0; v < 3; ++v) pt.push_back(Rational(uniform(rng, -4, 4), uniform(rng, 1, 3)));
        auto numeric = minors_of_size(m.evaluate(pt), size);
        ASSERT_EQ(numeric.size(), symbolic.size());
        for (std::size_t g = 0; g < numeric.size(); ++g) EXPECT_EQ(symbolic[g].evaluate(pt), numeric[g]);
      }
    }
  }
}

TEST(Minors, MaximalMinorAgreesWithLeibniz) {
  Rng rng(6);
  auto r = make_ring<Rational>(numbered_vars("x", 2));
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyMatrix<Rational> m(r, n, n);
    std::vector<std::vector<P>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = random_polynomial(rng, r, 2, 2);
        rows[i].push_back(m(i, j));
      }
    auto d = minors_of_size(m, static_cast<int>(n));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.front(), leibniz(rows, P(r), P::constant(r, 1)));
  }
}

TEST(PolyMatrix, ShapeAndRingChecks) {
  auto r = xy();
  EXPECT_THROW(PolyMatrix<Rational>(r, 2, 2, {P(r)}), InputError);
  PolyMatrix<Rational> a(r, 2, 3), b(r, 2, 3);
  EXPECT_THROW(a * b, InputError);
  EXPECT_EQ((a * b.transpose()).rows(), 2u);
}

TEST(PolyMatrix, BlockDiagonal) {
  auto r = xy();
  PolyMatrix<Rational> a(r, 1, 2, {parse(r, "x"), parse(r, "y")});
  PolyMatrix<Rational> b(r, 2, 1, {parse(r, "y"), parse(r, "1")});
  auto d = block_diagonal(a, b);
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d.cols(), 3u);
  EXPECT_EQ(d(0, 1), parse(r, "y"));
  EXPECT_EQ(d(2, 2), parse(r, "1"));
  EXPECT_TRUE(d(0, 2).is_zero());
  EXPECT_TRUE(d(1, 0).is_zero());
}
