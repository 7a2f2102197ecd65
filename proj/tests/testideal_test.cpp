#include <gtest/gtest.h>

#include "fsing/errors.hpp"
#include "fsing/testideal.hpp"
#include "helpers.hpp"

using namespace fsing;
using namespace fsing::testing;

namespace {

Monomial mono(std::initializer_list<std::int64_t> e) {
  std::vector<std::int64_t> v(e);
  return Monomial(v);
}

Ideal tau_of(const RingPtr& r, const Ideal& a, const char* t, Rounding rounding = Rounding::TimesQMinusOne) {
  TauOptions o;
  o.rounding = rounding;
  TauResult res = tau_ideal_regular(PairAt(RingCtx(r), a, parse_rational(t)), o);
  EXPECT_TRUE(res.stabilized);
  return res.ideal;
}

}  // namespace

TEST(TauMap, ExerciseMapsAsMultipliers) {
  auto r = ring(2, {"x", "y"});
  RingCtx S(r);
  EXPECT_EQ(strings(tau_map_pair(CartierMapSpec(S, 1, P(r, "1"))).ideal), (std::vector<std::string>{"1"}));
  EXPECT_EQ(strings(tau_map_pair(CartierMapSpec(S, 1, P(r, "y"))).ideal), (std::vector<std::string>{"y"}));
  EXPECT_EQ(strings(tau_map_pair(CartierMapSpec(S, 1, P(r, "x*y"))).ideal), (std::vector<std::string>{"x*y"}));
}

TEST(TauMap, ExerciseMapsAsBasisImages) {
  auto r = ring(2, {"x", "y"});
  RingCtx S(r);
  using Images = std::map<Monomial, Poly, MonomialLexLess>;
  const std::vector<std::pair<Monomial, std::string>> cases = {
      {mono({1, 1}), "1"}, {mono({1, 0}), "y"}, {mono({0, 0}), "x*y"}};
  for (const auto& [lam, want] : cases) {
    const CartierMapSpec phi = hom_to_multiplier(S, Images{{lam, P(r, "1")}}, 1);
    const TauResult res = tau_map_pair(phi);
    EXPECT_TRUE(res.stabilized);
    EXPECT_EQ(strings(res.ideal), (std::vector<std::string>{want}));
    EXPECT_EQ(strings(res.ideal), strings(tau_map_pair(CartierMapSpec(S, 1, P(r, want))).ideal));
  }
}

TEST(TauMap, StartingElementDoesNotMatter) {
  auto r = ring(3, {"x", "y"});
  CartierMapSpec phi(RingCtx(r), 1, P(r, "x^2*y^2 + x^3*y"));
  const Ideal a = tau_map_pair(phi).ideal;
  // any nonzero element of tau works as c
  const Ideal b = tau_map_pair(phi, a.groebner().back() * P(r, "x+y")).ideal;
  EXPECT_TRUE(a.same_as(b));
}

TEST(TauHypersurface, CharTwoExample) {
  auto r = ring(2);
  const RingCtx R(r, I(r, "z^2+x*y*z+x*y^2+x^2*y"));
  const TauResult tau = tau_hypersurface(R);
  EXPECT_TRUE(tau.stabilized);
  EXPECT_EQ(strings(tau.ideal), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_FALSE(is_strongly_f_regular(R));
}

TEST(TauHypersurface, EllipticTwoTestElements) {
  auto r = ring(7);
  const RingCtx R(r, I(r, "x^3+y^3+z^3"));
  const TauResult a = tau_hypersurface(R);
  const TauResult b = tau_hypersurface(R, P(r, "x*y"));
  EXPECT_EQ(strings(a.ideal), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_TRUE(a.ideal.same_as(b.ideal));
  // tau is proper, which a_1 > 0 and a_e growth below p^(2e) corroborate
  EXPECT_LT(vspace_length(splitting_ideal_Ie(R, 1)), 49u);
  EXPECT_FALSE(is_strongly_f_regular(R));
}

TEST(TauHypersurface, RegularCases) {
  auto r = ring(5, {"x", "y"});
  EXPECT_TRUE(tau_hypersurface(RingCtx(r)).ideal.is_unit());
  EXPECT_TRUE(is_strongly_f_regular(RingCtx(r)));
  auto r3 = ring(5);
  EXPECT_TRUE(is_strongly_f_regular(RingCtx(r3, I(r3, "x*y-z^2"))));
  EXPECT_TRUE(is_strongly_f_regular(RingCtx(r3, I(r3, "x^2+y^2+z^2"))));
}

TEST(TauHypersurface, TestElement) {
  auto r = ring(7);
  const RingCtx R(r, I(r, "x^3+y^3+z^3"));
  EXPECT_EQ(hypersurface_test_element(R), P(r, "27*x^6"));
  auto r2 = ring(2, {"x", "y"});
  try {
    hypersurface_test_element(RingCtx(r2, I(r2, "x^2+y^2")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoTestElementFound);
  }
}

TEST(TauHypersurface, Errors) {
  auto r = ring(5);
  try {
    tau_hypersurface(RingCtx(r, I(r, "x*y, z")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrincipal);
  }
  try {
    tau_hypersurface(RingCtx(r, I(r, "x^2*y")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
}

TEST(TauPair, SpecExamples) {
  auto r = ring(5, {"x", "y"});
  EXPECT_TRUE(tau_of(r, I(r, "x, y"), "0").is_unit());
  EXPECT_EQ(strings(tau_of(r, I(r, "x"), "1")), (std::vector<std::string>{"x"}));
  EXPECT_EQ(strings(tau_of(r, I(r, "x, y"), "2")), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(strings(tau_of(r, I(r, "x, y"), "3/2")), (std::vector<std::string>{"1"}));
  EXPECT_EQ(strings(tau_of(r, I(r, "x, y"), "5/2")), (std::vector<std::string>{"x", "y"}));
  // v + (1,1) strictly above the line a + b = 4
  EXPECT_EQ(strings(tau_of(r, I(r, "x^2, y^2"), "2")), (std::vector<std::string>{"x^3", "x^2*y", "x*y^2", "y^3"}));
  EXPECT_EQ(strings(tau_of(r, I(r, "x, y").power(2), "1")), (std::vector<std::string>{"x", "y"}));
}

TEST(TauPair, BruteForceChain) {
  // eth_root(a^ceil(2(q-1)) c, e) for e <= 4 with c = x: stabilises at (x, y)
  auto r = ring(5, {"x", "y"});
  const Ideal a = I(r, "x, y");
  Ideal acc = Ideal::zero(r);
  for (int e = 1; e <= 4; ++e) {
    const std::int64_t q = frobenius_exponent(5, e);
    acc = acc + eth_root(a.power(2 * (q - 1)).scaled(P(r, "x")), e);
  }
  EXPECT_TRUE(acc.same_as(I(r, "x, y")));
}

TEST(TauPair, Errors) {
  auto r = ring(5, {"x", "y"});
  EXPECT_THROW(PairAt(RingCtx(r), Ideal::zero(r), Rational(1)), Error);
  EXPECT_THROW(PairAt(RingCtx(r), I(r, "x"), Rational(-1)), Error);
  try {
    PairAt(RingCtx(r, I(r, "x*y")), I(r, "x"), Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuotientRingUnsupported);
  }
}

TEST(TauPair, MonomialAgainstNewtonPolyhedron) {
  struct Case {
    std::uint64_t p;
    std::vector<std::string> gens;
    const char* t;
  };
  const std::vector<Case> cases = {
      {2, {"x^2", "y^3"}, "1"},        {3, {"x^2", "y^3"}, "5/6"},   {5, {"x^2", "y^3"}, "4/3"},
      {2, {"x^3", "x*y", "y^4"}, "1"}, {3, {"x^4", "y^4"}, "3/4"},   {5, {"x*y^2", "x^3"}, "3/2"},
      {2, {"x", "y", "z"}, "2"},       {3, {"x^2", "y^2", "z^2"}, "2"}, {3, {"x*y", "y*z", "x*z"}, "3/2"},
  };
  for (const Case& c : cases) {
    std::vector<std::string> vars = {"x", "y"};
    for (const auto& g : c.gens)
      if (g.find('z') != std::string::npos) vars = {"x", "y", "z"};
    auto r = ring(c.p, vars);
    std::vector<Monomial> ms;
    for (const auto& g : c.gens) ms.push_back(P(r, g).leading().mono);
    const Ideal a = monomial_ideal(r, ms);
    const Ideal want = newton_tau_oracle(r, ms, parse_rational(c.t));
    EXPECT_TRUE(tau_of(r, a, c.t).same_as(want)) << a.to_string() << " t=" << c.t << " want " << want.to_string();
  }
}

TEST(Mixed, ProductOfPrincipal) {
  // tau(x^(1/2) y^(3/2)) = (y) in F_3[x, y]
  auto r = ring(3, {"x", "y"});
  RingCtx S(r);
  const TauResult res = tau_mixed_regular(PairAt(S, I(r, "x"), Rational(1, 2)), PairAt(S, I(r, "y"), Rational(3, 2)));
  EXPECT_TRUE(res.stabilized);
  EXPECT_EQ(strings(res.ideal), (std::vector<std::string>{"y"}));
}

TEST(Nu, ClosedForms) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto r = ring(p, {"x", "y"});
    const Ideal m = Ideal::maximal(r);
    for (int e = 1; e <= 3; ++e) {
      const std::uint64_t q = frobenius_exponent(p, e);
      EXPECT_EQ(nu_value(P(r, "x"), e, m), q - 1);
      EXPECT_EQ(nu_value(P(r, "x^2"), e, m), (q - 1) / 2);
      EXPECT_EQ(nu_value(P(r, "x*y"), e, m), q - 1);
    }
  }
  auto r = ring(7);
  EXPECT_EQ(nu_value(P(r, "x^3+y^3+z^3"), 1, Ideal::maximal(r)), 6u);
  try {
    nu_value(P(r, "x+1"), 1, Ideal::maximal(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInMaximal);
  }
}

TEST(Fpt, MonomialIntervals) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto r = ring(p, {"x", "y"});
    for (int a = 1; a <= 4; ++a) {
      const FptBounds b = fpt_bounds(P(r, "x").pow(a), 3);
      const Rational target(1, a);
      EXPECT_LT(b.lower, target);
      EXPECT_LE(target, b.upper);
      EXPECT_EQ(b.upper - b.lower, Rational(1, frobenius_exponent(p, 3)));
    }
    const FptBounds bxy = fpt_bounds(P(r, "x*y"), 2);
    EXPECT_LT(bxy.lower, 1);
    EXPECT_LE(1, bxy.upper);
  }
}

TEST(Fpt, Cusp) {
  auto r = ring(7, {"x", "y"});
  const FptBounds b = fpt_bounds(P(r, "y^2-x^3"), 3);
  EXPECT_EQ(b.nus, (std::vector<std::uint64_t>{5, 40, 285}));
  EXPECT_EQ(b.lower, Rational(285, 343));
  EXPECT_EQ(b.upper, Rational(286, 343));
  EXPECT_LT(b.lower, Rational(5, 6));
  EXPECT_LE(Rational(5, 6), b.upper);
}

TEST(Jumps, SpecExamples) {
  auto r = ring(5, {"x", "y"});
  RingCtx S(r);
  auto values = [](const JumpCandidates& j) {
    std::vector<std::string> out;
    for (const Rational& v : j.values) out.push_back(fraction_string(v));
    return out;
  };
  EXPECT_EQ(values(jumping_numbers_grid(S, I(r, "x"), Rational(2), 2)), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(values(jumping_numbers_grid(S, I(r, "x, y"), Rational(3), 1)), (std::vector<std::string>{"2", "3"}));
  EXPECT_TRUE(jumping_numbers_grid(S, I(r, "x"), Rational(0), 1).values.empty());
  const auto grid = jumping_numbers_grid(S, I(r, "x^2, y^3"), Rational(2), 6);
  EXPECT_EQ(values(grid).front(), "5/6");
}
