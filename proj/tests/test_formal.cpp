#include <gtest/gtest.h>

#include "detloci/formal.hpp"
#include "detloci/parse.hpp"
#include "detloci/random.hpp"

using namespace detloci;

namespace {
using P = Polynomial<Rational>;
}

TEST(FormalMap, InvertOneVariable) {
  auto r = make_ring<Rational>({"x"});
  FormalMap<Rational> f({parse_polynomial(r, "x + x^2")});
  auto g = invert_formal(f, TruncationOrder(3));
  EXPECT_EQ(g.components().front(), parse_polynomial(r, "x - x^2"));
  // direct expansion of g(f(x)) = (x + x^2) - (x + x^2)^2
  auto gf = parse_polynomial(r, "(x + x^2) - (x + x^2)^2").truncated(3);
  EXPECT_EQ(gf, parse_polynomial(r, "x"));
  auto g4 = invert_formal(f, TruncationOrder(4));
  EXPECT_EQ(g4.components().front(), parse_polynomial(r, "x - x^2 + 2*x^3"));
}

TEST(FormalMap, IdentityAndLinear) {
  auto r = make_ring<Rational>({"x", "y"});
  auto id = FormalMap<Rational>::identity(r);
  EXPECT_TRUE(invert_formal(id, TruncationOrder(5)).equals_mod(id, TruncationOrder(5)));
  auto r1 = make_ring<Rational>({"x"});
  FormalMap<Rational> f({parse_polynomial(r1, "2*x")});
  EXPECT_EQ(invert_formal(f, TruncationOrder(5)).components().front(), parse_polynomial(r1, "x/2"));
}

TEST(FormalMap, SingularLinearPartRejected) {
  auto r = make_ring<Rational>({"x", "y"});
  FormalMap<Rational> f({parse_polynomial(r, "x + y^2"), parse_polynomial(r, "2*x + x*y")});
  EXPECT_FALSE(f.is_invertible());
  try {
    invert_formal(f, TruncationOrder(3));
    FAIL() << "expected AlgebraError";
  } catch (const AlgebraError& e) {
    EXPECT_NE(std::string(e.what()).find("not a formal isomorphism"), std::string::npos);
  }
}

TEST(FormalMap, ConstantTermRejected) {
  auto r = make_ring<Rational>({"x"});
  EXPECT_THROW(FormalMap<Rational>({parse_polynomial(r, "x + 1")}), InputError);
}

TEST(FormalMap, RandomInversesComposeToIdentity) {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    std::size_t s = 1 + static_cast<std::size_t>(t % 4);
    unsigned n = 2 + static_cast<unsigned>(t % 4);
    auto r = make_ring<Rational>(numbered_vars("x", s));
    auto [a, a_inv] = random_invertible<Rational>(rng, s, {});
    std::vector<P> comps;
    for (std::size_t i = 0; i < s; ++i) {
      P c(r);
      for (std::size_t j = 0; j < s; ++j)
        if (!a(i, j).is_zero()) c += P::variable(r, j) * a(i, j);
      auto higher = random_polynomial(rng, r, 3, 3);
      c += higher - higher.truncated(2);
      comps.push_back(c);
    }
    FormalMap<Rational> f(comps);
    TruncationOrder order(n);
    auto g = invert_formal(f, order);
    auto id = FormalMap<Rational>::identity(r);
    EXPECT_TRUE(compose(f, g, order).equals_mod(id, order));
    EXPECT_TRUE(compose(g, f, order).equals_mod(id, order));
  }
}

TEST(TruncationOrder, MustBePositive) { EXPECT_THROW(TruncationOrder(0), InputError); }
