#include <gtest/gtest.h>

#include "fsing/errors.hpp"
#include "helpers.hpp"

using namespace fsing;
using namespace fsing::testing;

namespace {

std::vector<std::string> gb_strings(const std::vector<Poly>& basis) {
  std::vector<std::string> out;
  for (const Poly& g : basis) out.push_back(g.to_string());
  return out;
}

/// Zero-dimensional ideal: pure powers plus a few random polynomials.
Ideal random_zero_dim(const RingPtr& r, std::mt19937& rng, int& bound) {
  std::uniform_int_distribution<int> pw(1, 4);
  std::vector<Poly> gens;
  bound = 1;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    const int a = pw(rng);
    bound += a - 1;
    gens.push_back(Poly::monomial(r, Monomial::variable(i, a)));
  }
  gens.push_back(random_poly(r, rng, 2, 3));
  return Ideal(r, gens);
}

/// Every monomial of degree `bound` lies in I.
bool contains_power_of_max(const Ideal& I, int bound) {
  for (const Monomial& m : monomials_below(I.ring()->nvars(), bound + 1))
    if (m.degree() == bound && !member(Poly::monomial(I.ring(), m), I)) return false;
  return true;
}

/// Span of mu*g modulo m^bound, as rows over the monomials of degree < bound.
Echelon macaulay(const Ideal& I, int bound, const std::vector<Monomial>& cols) {
  Echelon ech(I.ring()->characteristic(), cols.size());
  for (const Poly& g : I.gens())
    for (const Monomial& mu : cols) ech.add(coords(g.times(mu), cols));
  return ech;
}

}  // namespace

TEST(Groebner, SmallExamples) {
  auto r = ring(5, {"x", "y"});
  EXPECT_EQ(gb_strings(I(r, "x, x+y").groebner()), (std::vector<std::string>{"y", "x"}));
  // y^3 lies in the ideal, but the reduced basis already has y^2 (sympy agrees).
  const Ideal J = I(r, "x^2-y, x^3");
  EXPECT_EQ(gb_strings(J.groebner()), (std::vector<std::string>{"y^2", "x*y", "x^2 + 4*y"}));
  EXPECT_TRUE(member(P(r, "y^3"), J));
  EXPECT_TRUE(member(P(r, "y^2"), J));
  EXPECT_FALSE(member(P(r, "y"), J));
  EXPECT_EQ(gb_strings(Ideal::zero(r).groebner()), (std::vector<std::string>{"0"}));
  EXPECT_EQ(gb_strings(I(r, "x^2-y, x^3").groebner(MonomialOrder::lex())),
            (std::vector<std::string>{"y^2", "x*y", "x^2 + 4*y"}));
}

TEST(Groebner, CyclicThree) {
  // cyclic-3 over F_7; basis cross-checked with sympy
  auto r = ring(7);
  const Ideal J = I(r, "x+y+z, x*y+y*z+z*x, x*y*z-1");
  EXPECT_EQ(J.groebner(), (std::vector<Poly>{P(r, "x+y+z"), P(r, "y^2+y*z+z^2"), P(r, "z^3-1")}));
  EXPECT_EQ(vspace_length(J), 6u);
  EXPECT_TRUE(member(P(r, "z^3-1"), J));
  EXPECT_FALSE(member(P(r, "z^2-1"), J));
}

TEST(Groebner, UniquenessUnderGeneratorChange) {
  std::mt19937 rng(23);
  auto r = ring(7);
  for (int k = 0; k < 60; ++k) {
    std::vector<Poly> g;
    for (int i = 0; i < 3; ++i) g.push_back(random_poly(r, rng, 2, 3));
    std::vector<Poly> h = g;
    h[0] = h[0] + random_poly(r, rng, 1, 2) * g[1];
    h[2] = h[2] + random_poly(r, rng, 1, 2) * h[0];
    std::swap(h[1], h[2]);
    ASSERT_EQ(Ideal(r, g).groebner(), Ideal(r, h).groebner());
  }
}

TEST(Member, SpecExamples) {
  auto r = ring(5, {"x", "y"});
  EXPECT_TRUE(member(P(r, "x+y"), I(r, "x, y")));
  EXPECT_FALSE(member(P(r, "x"), I(r, "x^2")));
  auto r4 = ring(5, {"w", "x", "y", "z"});
  EXPECT_FALSE(member(P(r4, "w^4+x^4+y^4+z^4").pow(4), I(r4, "w^5, x^5, y^5, z^5")));
}

TEST(Member, AgreesWithLinearAlgebra) {
  std::mt19937 rng(31);
  for (int k = 0; k < 50; ++k) {
    auto r = k % 2 ? ring(5, {"x", "y"}) : ring(3);
    int bound = 0;
    const Ideal J = random_zero_dim(r, rng, bound);
    ASSERT_TRUE(contains_power_of_max(J, bound));
    const auto cols = monomials_below(r->nvars(), bound);
    const Echelon ech = macaulay(J, bound, cols);
    for (int s = 0; s < 6; ++s) {
      Poly f = random_poly(r, rng, bound, 2);
      if (s % 2) f = f * J.gens()[s % J.gens().size()] + random_poly(r, rng, 1, 1).scaled(s % 3 == 0);
      ASSERT_EQ(member(f, J), ech.in_span(coords(f, cols))) << J.to_string() << " " << f.to_string();
    }
  }
}

TEST(Length, AgreesWithLinearAlgebra) {
  std::mt19937 rng(37);
  for (int k = 0; k < 50; ++k) {
    auto r = k % 2 ? ring(7, {"x", "y"}) : ring(2);
    int bound = 0;
    const Ideal J = random_zero_dim(r, rng, bound);
    const auto cols = monomials_below(r->nvars(), bound);
    const Echelon ech = macaulay(J, bound, cols);
    ASSERT_EQ(vspace_length(J), cols.size() - ech.rank()) << J.to_string();
  }
}

TEST(Length, SpecExamples) {
  auto r = ring(5, {"x", "y"});
  EXPECT_EQ(vspace_length(I(r, "x^2, y^3")), 6u);
  EXPECT_EQ(vspace_length(Ideal::maximal(ring(5))), 1u);
  EXPECT_EQ(vspace_length(Ideal::unit(r)), 0u);
  auto r4 = ring(5, {"w", "x", "y", "z"});
  EXPECT_EQ(vspace_length(I(r4, "w^4+x^4+y^4+z^4, w^5, x^5, y^5, z^5")), 339u);
  EXPECT_THROW(vspace_length(I(r, "x")), Error);
}

TEST(Colon, SpecExamples) {
  auto r = ring(5, {"x", "y"});
  EXPECT_EQ(strings(colon(I(r, "x^2*y"), I(r, "y"))), (std::vector<std::string>{"x^2"}));
  EXPECT_EQ(strings(colon(I(r, "x"), I(r, "x"))), (std::vector<std::string>{"1"}));
  const Poly f = P(r, "y^2-x^3+x*y");
  EXPECT_TRUE(colon(Ideal(r, {f.pow(5)}), Ideal(r, {f})).same_as(Ideal(r, {f.pow(4)})));
  try {
    colon(I(r, "x"), Ideal::zero(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDivisorIdeal);
  }
}

TEST(Colon, MonomialBruteForce) {
  std::mt19937 rng(41);
  auto r = ring(3);
  for (int k = 0; k < 100; ++k) {
    std::vector<Monomial> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(random_monomial(3, rng, 3));
    for (int i = 0; i < 2; ++i) b.push_back(random_monomial(3, rng, 2));
    const Ideal A = monomial_ideal(r, a), B = monomial_ideal(r, b);
    const Ideal C = colon(A, B);
    for (const Monomial& mu : monomials_below(3, 7)) {
      bool all = true;
      for (const Monomial& beta : b) all = all && member(Poly::monomial(r, mu * beta), A);
      ASSERT_EQ(member(Poly::monomial(r, mu), C), all);
    }
  }
}

TEST(Colon, Adjunction) {
  std::mt19937 rng(43);
  auto r = ring(5);
  for (int k = 0; k < 40; ++k) {
    const Ideal A(r, {random_poly(r, rng, 2, 2), random_poly(r, rng, 3, 2)});
    const Ideal B(r, {random_poly(r, rng, 1, 2)});
    if (B.is_zero()) continue;
    const Ideal C = colon(A, B);
    ASSERT_TRUE(A.contains(C * B));
    for (const Poly& a : A.gens()) ASSERT_TRUE(member(a, C));
  }
}

TEST(Intersect, SpecExamples) {
  auto r = ring(5, {"x", "y"});
  EXPECT_EQ(strings(intersect(I(r, "x"), I(r, "y"))), (std::vector<std::string>{"x*y"}));
  EXPECT_EQ(strings(intersect(I(r, "x^2"), I(r, "x^3"))), (std::vector<std::string>{"x^3"}));
  const Ideal J = I(r, "x^2-y, x*y+1");
  EXPECT_TRUE(intersect(J, J).same_as(J));
}

TEST(Intersect, Characterisation) {
  std::mt19937 rng(47);
  auto r = ring(3);
  for (int k = 0; k < 40; ++k) {
    const Ideal A(r, {random_poly(r, rng, 2, 2), random_poly(r, rng, 2, 2)});
    const Ideal B(r, {random_poly(r, rng, 2, 3)});
    const Ideal C = intersect(A, B);
    ASSERT_TRUE(A.contains(C) && B.contains(C));
    ASSERT_TRUE(C.contains(A * B));
    for (int s = 0; s < 4; ++s) {
      Poly f = random_poly(r, rng, 2, 2) * (s % 2 ? A.gens()[0] : B.gens()[0]);
      ASSERT_EQ(member(f, C), member(f, A) && member(f, B));
    }
  }
}

TEST(KrullDim, SpecExamples) {
  auto r = ring(5);
  EXPECT_EQ(krull_dim(RingCtx(r)), 3u);
  EXPECT_EQ(krull_dim(RingCtx(r, I(r, "x*y-z^2"))), 2u);
  auto r4 = ring(5, {"w", "x", "y", "z"});
  EXPECT_EQ(krull_dim(RingCtx(r4, I(r4, "w^4+x^4+y^4+z^4"))), 3u);
  EXPECT_EQ(krull_dim(RingCtx(r, I(r, "x*y, x*z"))), 2u);
  EXPECT_EQ(krull_dim(RingCtx(r, I(r, "x, y^2, z-1"))), 0u);
}

TEST(Ideal, MixedRingsRejected) {
  auto r = ring(5), s = ring(7);
  try {
    I(r, "x") + I(s, "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedRings);
  }
  EXPECT_THROW(RingCtx(r, Ideal::unit(r)), Error);
}

TEST(Ideal, PowersAndProducts) {
  auto r = ring(5, {"x", "y"});
  EXPECT_EQ(strings(I(r, "x, y").power(2)), (std::vector<std::string>{"x^2", "x*y", "y^2"}));
  EXPECT_TRUE(I(r, "x+y, x*y").power(3).same_as(I(r, "x+y, x*y") * I(r, "x+y, x*y") * I(r, "x+y, x*y")));
  EXPECT_TRUE(I(r, "x, y").power(0).is_unit());
}
