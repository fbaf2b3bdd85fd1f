#include <gaugemod/groebner.hpp>
#include <gaugemod/localization.hpp>
#include <gaugemod/parser.hpp>
#include <gaugemod/sampling.hpp>

#include <gtest/gtest.h>

using namespace gaugemod;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& ring, std::initializer_list<const char*> src) {
  std::vector<Polynomial> out;
  for (auto s : src) out.push_back(parse_poly(s, ring));
  return out;
}

} // namespace

TEST(Groebner, PrincipalIdealsAreAlreadyBases) {
  auto ts = make_ring({"t", "s"});
  auto gb = buchberger(Ideal(ts, parse_all(ts, {"t*s - 1"})));
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], parse_poly("t*s - 1", ts));

  auto xyz = make_ring({"x", "y", "z"});
  auto sphere = buchberger(Ideal(xyz, parse_all(xyz, {"x^2+y^2+z^2-1"})));
  ASSERT_EQ(sphere.basis.size(), 1u);
  EXPECT_EQ(sphere.basis[0], parse_poly("x^2+y^2+z^2-1", xyz));
}

TEST(Groebner, UnitIdeals) {
  auto xyz = make_ring({"x", "y", "z"});
  auto gb = buchberger(Ideal(xyz, parse_all(xyz, {"x^2+y^2+z^2-1", "x^2", "y^2", "z^2"})));
  EXPECT_TRUE(gb.is_unit());
  EXPECT_EQ(gb.basis.front(), Polynomial::constant(xyz, 1));

  auto x = make_ring({"x"});
  EXPECT_TRUE(is_unit_ideal(Ideal(x, parse_all(x, {"x", "1 - x"}))));
  auto xy = make_ring({"x", "y"});
  EXPECT_FALSE(is_unit_ideal(Ideal(xy, parse_all(xy, {"x^2", "y^2"}))));
  auto mon = buchberger(Ideal(xy, parse_all(xy, {"x^2", "y^2"})));
  EXPECT_EQ(mon.basis.size(), 2u);
}

TEST(Groebner, NormalForms) {
  auto xyz = make_ring({"x", "y", "z"});
  auto gb = buchberger(Ideal(xyz, parse_all(xyz, {"x^2+y^2+z^2-1"})));
  EXPECT_EQ(normal_form(parse_poly("x^2+y^2+z^2", xyz), gb), Polynomial::constant(xyz, 1));
  EXPECT_EQ(normal_form(parse_poly("x", xyz), gb), parse_poly("x", xyz));

  auto ts = make_ring({"t", "s"});
  auto circle = buchberger(Ideal(ts, parse_all(ts, {"t*s - 1"})));
  EXPECT_TRUE(normal_form(parse_poly("t*s - 1", ts), circle).is_zero());
  EXPECT_THROW(normal_form(parse_poly("x", xyz), circle), MismatchError);
}

TEST(Groebner, Membership) {
  auto ts = make_ring({"t", "s"});
  Ideal circle(ts, parse_all(ts, {"t*s - 1"}));
  EXPECT_TRUE(is_member(parse_poly("t*s - 1", ts), circle));
  EXPECT_FALSE(is_member(parse_poly("t", ts), circle));
  auto xyz = make_ring({"x", "y", "z"});
  Ideal sphere(xyz, parse_all(xyz, {"x^2+y^2+z^2-1"}));
  EXPECT_TRUE(is_member(parse_poly("z*(x^2+y^2+z^2-1)", xyz), sphere));
}

TEST(Groebner, NontrivialBasisSatisfiesBuchbergerCriterion) {
  auto xyz = make_ring({"x", "y", "z"});
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    Ideal twisted(xyz, parse_all(xyz, {"x^2 - y", "x*y - z", "y^2 - x*z"}));
    auto gb = buchberger(twisted, ord);
    EXPECT_TRUE(s_pairs_reduce_to_zero(gb));
    for (const auto& g : twisted.generators()) EXPECT_TRUE(normal_form(g, gb).is_zero());
    for (const auto& g : gb.basis) EXPECT_EQ(leading_term(g, ord).second, 1);
  }
  Ideal circle2(xyz, parse_all(xyz, {"x^2 + y^2 - 1", "x - z^2"}));
  auto gb = buchberger(circle2);
  EXPECT_TRUE(s_pairs_reduce_to_zero(gb));
}

TEST(Groebner, NormalFormProperties) {
  auto xyz = make_ring({"x", "y", "z"});
  Ideal ideal(xyz, parse_all(xyz, {"x^2 - y", "x*y - z"}));
  auto gb = buchberger(ideal);
  Sampler rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = rng.polynomial(xyz, 4);
    auto nf = normal_form(p, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    EXPECT_TRUE(is_member(p - nf, gb));
    // A-linear recombination of generators lies in the ideal
    auto comb = rng.polynomial(xyz, 2) * ideal.generators()[0] + rng.polynomial(xyz, 2) * ideal.generators()[1];
    EXPECT_TRUE(is_member(comb, gb));
    EXPECT_EQ(normal_form(p + comb, gb), nf);
  }
}

TEST(Localization, ArithmeticOnTheSphere) {
  auto xyz = make_ring({"x", "y", "z"});
  auto a = std::make_shared<const QuotientRing>(Ideal(xyz, parse_all(xyz, {"x^2+y^2+z^2-1"})));
  auto loc = std::make_shared<const Localization>(a, parse_poly("z", xyz));
  auto P = [&](const char* s) { return parse_poly(s, xyz); };
  LocalizedElement xz(loc, P("x"), 1), yz(loc, P("y"), 1);
  EXPECT_EQ(xz + yz, LocalizedElement(loc, P("x + y"), 1));
  EXPECT_EQ(xz * xz, LocalizedElement(loc, P("x^2"), 2));
  EXPECT_EQ(LocalizedElement(loc, P("1 - z^2")), LocalizedElement(loc, P("x^2 + y^2")));
  // cross-multiplication across powers: z/z^2 = 1/z
  EXPECT_EQ(LocalizedElement(loc, P("z"), 2), LocalizedElement(loc, P("1"), 1));
  EXPECT_NE(xz, yz);

  auto other = std::make_shared<const Localization>(a, P("x"));
  EXPECT_THROW(xz + LocalizedElement(other, P("1")), MismatchError);
  EXPECT_THROW(Localization(a, P("x^2+y^2+z^2-1")), Error);
}

TEST(Localization, EqualityIsAnEquivalence) {
  auto xyz = make_ring({"x", "y", "z"});
  auto a = std::make_shared<const QuotientRing>(Ideal(xyz, parse_all(xyz, {"x^2+y^2+z^2-1"})));
  auto loc = std::make_shared<const Localization>(a, parse_poly("z", xyz));
  Sampler rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = rng.localized(loc, 3, 2);
    // same element written with different powers of h
    int k1 = static_cast<int>(rng.integer(0, 2)), k2 = static_cast<int>(rng.integer(0, 2));
    LocalizedElement q(loc, p.numerator() * loc->h_power(k1), p.hpower() + k1);
    LocalizedElement r(loc, p.numerator() * loc->h_power(k2), p.hpower() + k2);
    EXPECT_EQ(p, p);
    EXPECT_EQ(p == q, q == p);
    EXPECT_TRUE(p == q && q == r && p == r);
  }
}

TEST(Localization, QuotientRuleDerivation) {
  // tau_x = d/dx - (x/z) d/dz on the sphere, chart z != 0
  auto xyz = make_ring({"x", "y", "z"});
  auto a = std::make_shared<const QuotientRing>(Ideal(xyz, parse_all(xyz, {"x^2+y^2+z^2-1"})));
  auto loc = std::make_shared<const Localization>(a, parse_poly("z", xyz));
  auto P = [&](const char* s) { return parse_poly(s, xyz); };
  Derivation tau{{LocalizedElement(loc, P("1")), LocalizedElement::zero(loc), LocalizedElement(loc, P("-x"), 1)}};
  EXPECT_EQ(loc_partial(LocalizedElement(loc, P("z")), tau), LocalizedElement(loc, P("-x"), 1));
  EXPECT_TRUE(loc_partial(LocalizedElement(loc, P("y")), tau).is_zero());
  EXPECT_EQ(loc_partial(LocalizedElement(loc, P("x^2")), tau), LocalizedElement(loc, P("2*x")));
  // d/dx (1/z) = -(1/z^2)(-x/z) = x/z^3
  EXPECT_EQ(loc_partial(LocalizedElement(loc, P("1"), 1), tau), LocalizedElement(loc, P("x"), 3));
  // the relation differentiates to zero
  EXPECT_TRUE(loc_partial(LocalizedElement(loc, P("x^2+y^2+z^2")), tau).is_zero());
}
