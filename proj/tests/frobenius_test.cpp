#include <gtest/gtest.h>

#include "fsing/errors.hpp"
#include "fsing/frobenius.hpp"
#include "helpers.hpp"

using namespace fsing;
using namespace fsing::testing;

namespace {

Monomial mono(std::initializer_list<std::int64_t> e) {
  std::vector<std::int64_t> v(e);
  return Monomial(v);
}

/// a_e by linear algebra: rank of g -> (g u truncated to the box [0,q)^n) on
/// box monomials g, with u = f^(q-1). Its kernel is I_e / m^[q].
std::uint64_t ae_by_rank(const Poly& f, int e) {
  const RingPtr& r = f.ring();
  const std::int64_t q = frobenius_exponent(r->characteristic(), e);
  const Poly u = f.pow(q - 1);
  const auto box = box_monomials(r->nvars(), q);
  Echelon ech(r->characteristic(), box.size());
  for (const Monomial& g : box) ech.add(coords(u.times(g), box));
  return ech.rank();
}

}  // namespace

TEST(Bracket, SpecExamples) {
  auto r3 = ring(3, {"x", "y"});
  EXPECT_EQ(strings(bracket_power(I(r3, "x, y"), 1)), (std::vector<std::string>{"x^3", "y^3"}));
  auto r2 = ring(2, {"x", "y"});
  EXPECT_EQ(strings(bracket_power(I(r2, "x+y"), 2)), (std::vector<std::string>{"x^4 + y^4"}));
  EXPECT_TRUE(bracket_power(I(r3, "x, x+y"), 2).same_as(bracket_power(I(r3, "x, y"), 2)));
}

TEST(Root, SpecExamples) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto r = ring(p, {"x", "y"});
    const Ideal xp1(r, {P(r, "x").pow(p + 1)});
    EXPECT_EQ(strings(eth_root(xp1, 1)), (std::vector<std::string>{"x"}));
    // minimality: the only monomial ideals K with x^(p+1) in K^[p] contain x
    EXPECT_FALSE(bracket_power(I(r, "x^2, y"), 1).contains(xp1));
    for (int e = 1; e <= 3; ++e)
      EXPECT_EQ(strings(eth_root(Ideal(r, {P(r, "x").pow(frobenius_exponent(p, e))}), e)),
                (std::vector<std::string>{"x"}));
  }
  auto r2 = ring(2, {"x", "y"});
  EXPECT_TRUE(eth_root(I(r2, "x*y"), 1).is_unit());
  EXPECT_TRUE(eth_root(I(r2, "x^2*y^3 + x^4"), 1).same_as(I(r2, "x*y, x^2")));
}

TEST(Root, QuotientRefused) {
  auto r = ring(3);
  RingCtx R(r, I(r, "x*y-z^2"));
  try {
    eth_root(R, I(r, "x"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuotientRingUnsupported);
  }
}

TEST(Trace, ImageExamples) {
  auto r = ring(2, {"x", "y"});
  RingCtx S(r);
  EXPECT_EQ(strings(trace_image(I(r, "x^2"), CartierMapSpec(S, 1, P(r, "1")))), (std::vector<std::string>{"x"}));
  EXPECT_TRUE(trace_image(I(r, "x"), CartierMapSpec(S, 1, P(r, "y"))).is_unit());
  EXPECT_EQ(trace(P(r, "x*y + x^3*y"), 1), P(r, "1 + x"));
  EXPECT_TRUE(trace(P(r, "x + y"), 1).is_zero());
  EXPECT_THROW(CartierMapSpec(S, 1, Poly(r)), Error);
}

TEST(Trace, PowerOfMap) {
  auto r = ring(3, {"x", "y"});
  CartierMapSpec phi(RingCtx(r), 1, P(r, "x*y+y^2"));
  const CartierMapSpec phi2 = phi.power(2);
  EXPECT_EQ(phi2.level(), 2);
  EXPECT_EQ(phi2.multiplier(), P(r, "x*y+y^2").pow(4));
  // phi^2(f^(1/9)) = phi(phi(f^(1/9))^(1/3))
  for (const char* f : {"x^5*y^7", "x^8*y^8 + x^2", "x^17*y^4 + x*y"}) {
    const Poly g = P(r, f);
    EXPECT_EQ(apply_map(phi2, g), apply_map(phi, apply_map(phi, g)));
  }
}

TEST(HomToMultiplier, ExerciseMaps) {
  auto r = ring(2, {"x", "y"});
  RingCtx S(r);
  using Images = std::map<Monomial, Poly, MonomialLexLess>;
  EXPECT_EQ(hom_to_multiplier(S, Images{{mono({1, 1}), P(r, "1")}}, 1).multiplier(), P(r, "1"));
  EXPECT_EQ(hom_to_multiplier(S, Images{{mono({1, 0}), P(r, "1")}}, 1).multiplier(), P(r, "y"));
  EXPECT_EQ(hom_to_multiplier(S, Images{{mono({0, 0}), P(r, "1")}}, 1).multiplier(), P(r, "x*y"));
  // beta sends (yx)^(1/2) to 1 and y^(1/2) to 0
  const CartierMapSpec beta(S, 1, P(r, "y"));
  EXPECT_EQ(apply_map(beta, P(r, "x")), P(r, "1"));
  EXPECT_TRUE(apply_map(beta, P(r, "y")).is_zero());
  try {
    hom_to_multiplier(S, Images{{mono({2, 0}), P(r, "1")}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidBasisIndex);
  }
  try {
    hom_to_multiplier(S, Images{{mono({1, 0}), Poly(r)}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroMultiplier);
  }
}

TEST(HomToMultiplier, RoundTripsThroughApply) {
  std::mt19937 rng(7);
  auto r = ring(3, {"x", "y"});
  RingCtx S(r);
  for (int k = 0; k < 50; ++k) {
    std::map<Monomial, Poly, MonomialLexLess> images;
    for (const Monomial& lam : box_monomials(2, 3))
      if (rng() % 3 == 0) images.emplace(lam, random_poly(r, rng, 2, 2));
    bool any = false;
    for (const auto& [lam, g] : images) any = any || !g.is_zero();
    if (!any) continue;
    const CartierMapSpec phi = hom_to_multiplier(S, images, 1);
    for (const Monomial& lam : box_monomials(2, 3)) {
      auto it = images.find(lam);
      const Poly want = it == images.end() ? Poly(r) : it->second;
      ASSERT_EQ(apply_map(phi, Poly::monomial(r, lam)), want);
    }
  }
}

TEST(Fedder, Battery) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto r = ring(p);
    EXPECT_EQ(fedder_is_fpure(I(r, "x^3+y^3+z^3"), Ideal::maximal(r)), p % 3 == 1) << p;
  }
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    auto r = ring(p);
    EXPECT_TRUE(fedder_is_fpure(I(r, "x*y-z^2"), Ideal::maximal(r))) << p;
    EXPECT_FALSE(fedder_is_fpure(I(r, "x^4+y^4+z^4"), Ideal::maximal(r))) << p;
  }
}

TEST(Fedder, Errors) {
  auto r = ring(5);
  try {
    fedder_is_fpure(I(r, "x^2"), I(r, "x, y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMaximal);
  }
  try {
    fedder_is_fpure(I(r, "x-1"), Ideal::maximal(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContaining);
  }
}

TEST(Fedder, NonPrincipal) {
  // the three coordinate axes: a Stanley-Reisner ring, so F-pure
  auto r = ring(3);
  EXPECT_TRUE(fedder_is_fpure(I(r, "x*y, x*z, y*z"), Ideal::maximal(r)));
  EXPECT_FALSE(fedder_is_fpure(I(r, "x^2, y"), Ideal::maximal(r)));
}

TEST(Fedder, PrincipalMatchesPowerTest) {
  std::mt19937 rng(19);
  for (int k = 0; k < 60; ++k) {
    const std::uint64_t p = k % 2 ? 2 : 3;
    auto r = ring(p);
    Poly f = random_poly(r, rng, 3, 3);
    f = f - Poly::constant(r, f.coefficient(Monomial()));
    if (f.is_zero()) continue;
    const bool expect = !member(f.pow(p - 1), bracket_power(Ideal::maximal(r), 1));
    ASSERT_EQ(fedder_is_fpure(Ideal(r, {f}), Ideal::maximal(r)), expect) << f.to_string();
  }
}

TEST(SplittingIdeal, RegularRing) {
  for (std::uint64_t p : {2u, 3u}) {
    auto r = ring(p);
    for (int e = 1; e <= 2; ++e) {
      const Ideal Ie = splitting_ideal_Ie(RingCtx(r), e);
      EXPECT_TRUE(Ie.same_as(bracket_power(Ideal::maximal(r), e)));
      EXPECT_EQ(vspace_length(Ie), static_cast<std::uint64_t>(std::pow(frobenius_exponent(p, e), 3)));
    }
  }
}

TEST(SplittingIdeal, A1AgainstRankOracle) {
  auto r = ring(5);
  const Poly f = P(r, "x*y-z^2");
  const Ideal Ie = splitting_ideal_Ie(RingCtx(r, Ideal(r, {f})), 1);
  EXPECT_EQ(vspace_length(Ie), 13u);
  EXPECT_EQ(ae_by_rank(f, 1), 13u);
  EXPECT_NEAR(13.0 / 25.0, 0.5, 0.1);
}

TEST(SplittingIdeal, EllipticNotFPure) {
  auto r = ring(5);
  EXPECT_EQ(vspace_length(splitting_ideal_Ie(RingCtx(r, I(r, "x^3+y^3+z^3")), 1)), 0u);
}

TEST(SplittingIdeal, RandomHypersurfacesAgainstRankOracle) {
  std::mt19937 rng(29);
  for (int k = 0; k < 30; ++k) {
    const std::uint64_t p = k % 2 ? 2 : 3;
    auto r = ring(p);
    Poly f = random_poly(r, rng, 2, 3);
    f = f - Poly::constant(r, f.coefficient(Monomial()));
    if (f.is_zero()) continue;
    const Ideal Ie = splitting_ideal_Ie(RingCtx(r, Ideal(r, {f})), 1);
    ASSERT_EQ(vspace_length(Ie), ae_by_rank(f, 1)) << f.to_string();
  }
}
