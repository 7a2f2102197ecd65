#include <gtest/gtest.h>

#include <random>

#include "fsing/errors.hpp"
#include "fsing/field.hpp"
#include "helpers.hpp"

using namespace fsing;
using fsing::testing::P;
using fsing::testing::random_poly;
using fsing::testing::ring;

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(6), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(std::uint64_t{1} << 31), Error);
  EXPECT_NO_THROW(PrimeField(2147483647));
  try {
    make_ring(6, {"x"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadPrime);
  }
}

TEST(Field, AxiomsOnSamples) {
  std::mt19937 rng(11);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 65521u, 2147483647u}) {
    PrimeField F(p);
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(p) - 1);
    for (int k = 0; k < 200; ++k) {
      FpScalar a(F, d(rng)), b(F, d(rng)), c(F, d(rng));
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a - a, FpScalar(F, 0));
      if (a.value() != 0) {
        EXPECT_EQ(a * a.pow(p - 2), FpScalar(F, 1));
        EXPECT_EQ(a * a.inverse(), FpScalar(F, 1));
      }
    }
  }
}

TEST(Field, MixedModuliThrow) {
  FpScalar a(PrimeField(5), 1), b(PrimeField(7), 1);
  EXPECT_THROW(a + b, Error);
}

TEST(Poly, FreshmansDream) {
  auto r = ring(2, {"x", "y"});
  EXPECT_EQ((P(r, "x+y")).pow(2), P(r, "x^2+y^2"));
  EXPECT_TRUE((P(r, "x+y") * Poly(r)).is_zero());
}

TEST(Poly, MultinomialCoefficient) {
  // coefficient of x^6 y^6 z^6 in (x^3+y^3+z^3)^6 is 6!/(2!2!2!) = 90 = 6 mod 7
  auto r = ring(7);
  Poly f6 = P(r, "x^3+y^3+z^3").pow(6);
  EXPECT_EQ(f6.coefficient(P(r, "x^6*y^6*z^6").leading().mono), 6u);
  EXPECT_EQ(P(r, "x^3+y^3+z^3").pow(7), P(r, "x^21+y^21+z^21"));
}

TEST(Poly, HanMonskyPowerSupport) {
  // every term of f^4 has some exponent 4 < 5, and x^4 y^4 z^4 w^4 would need
  // all four; its coefficient is 4!/(1!1!1!1!) = 24 = 4 mod 5
  auto r = ring(5, {"w", "x", "y", "z"});
  Poly f4 = P(r, "w^4+x^4+y^4+z^4").pow(4);
  EXPECT_EQ(f4.coefficient(P(r, "w^4*x^4*y^4*z^4").leading().mono), 4u);
}

TEST(Poly, FrobeniusIsRingMap) {
  std::mt19937 rng(3);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto r = ring(p);
    for (int k = 0; k < 200; ++k) {
      Poly f = random_poly(r, rng, 3, 4), g = random_poly(r, rng, 3, 4);
      ASSERT_EQ((f + g).pow(p), f.pow(p) + g.pow(p));
      ASSERT_EQ(f.frobenius(1), f.pow(p));
    }
  }
}

TEST(Poly, DecomposeExamples) {
  auto r5 = ring(5, {"x"});
  auto d = frobenius_decompose(P(r5, "x^6"), 1);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, Monomial::variable(0));
  EXPECT_EQ(d.begin()->second, P(r5, "x"));

  auto r2 = ring(2, {"x", "y"});
  auto d2 = frobenius_decompose(P(r2, "x*y"), 1);
  ASSERT_EQ(d2.size(), 1u);
  EXPECT_EQ(d2.begin()->first, P(r2, "x*y").leading().mono);
  EXPECT_EQ(d2.begin()->second, P(r2, "1"));
}

TEST(Poly, DecomposeRoundTrip) {
  std::mt19937 rng(17);
  for (std::uint64_t p : {2u, 3u}) {
    auto r = ring(p);
    for (int k = 0; k < 200; ++k) {
      const int e = 1 + k % 2;
      Poly f = random_poly(r, rng, 12, 6);
      Poly back(r);
      for (const auto& [lambda, g] : frobenius_decompose(f, e)) back = back + g.frobenius(e).times(lambda);
      ASSERT_EQ(back, f) << f.to_string();
    }
  }
}

TEST(Poly, PrintParseRoundTrip) {
  std::mt19937 rng(5);
  for (std::uint64_t p : {2u, 7u, 101u}) {
    auto r = ring(p);
    for (int k = 0; k < 200; ++k) {
      Poly f = random_poly(r, rng, 5, 5);
      ASSERT_EQ(P(r, f.to_string()), f) << f.to_string();
    }
  }
}

TEST(Poly, CanonicalText) {
  auto r = ring(5, {"x", "y"});
  EXPECT_EQ(P(r, "x^2-y").to_string(), "x^2 + 4*y");
  EXPECT_EQ(P(r, "(x+y)^5").to_string(), "x^5 + y^5");
  EXPECT_EQ(P(r, "0").to_string(), "0");
  EXPECT_EQ(P(r, "3*x*y - 3*y*x + 2").to_string(), "2");
}

TEST(Parse, PositionedErrors) {
  auto r = ring(5, {"x", "y"});
  try {
    P(r, "x + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownName);
  }
  EXPECT_THROW(P(r, "x +"), Error);
  EXPECT_THROW(P(r, "x^"), Error);
  EXPECT_THROW(P(r, "(x"), Error);
}

TEST(Poly, VariableLimit) {
  std::vector<std::string> many;
  for (int i = 0; i < 15; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_THROW(make_ring(5, many), Error);
  many.pop_back();
  EXPECT_NO_THROW(make_ring(5, many));
}
