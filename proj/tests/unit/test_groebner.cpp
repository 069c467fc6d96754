#include <gtest/gtest.h>

#include "fixture_algebras.hpp"
#include "rees/errors.hpp"
#include "rees/poly_ops.hpp"
#include "rees/ring_map.hpp"

using namespace rees;
using rees::testing::P;
using rees::testing::Ps;

// Reference values below were computed independently with sympy
// (tests/oracles/oracles.py) and frozen.

TEST(NormalForm, Examples) {
  auto lex = Ring::make({"x", "y"}, MonomialOrder::lex(2));
  EXPECT_EQ(normal_form(P(lex, "x^2*y"), {P(lex, "x^2 - y")}), P(lex, "y^2"));
  auto r = Ring::make({"x", "y", "u", "v"});
  Ideal i(r, {P(r, "x*v - y*u - 1")});
  EXPECT_TRUE(i.normal_form(P(r, "x*v - y*u - 1")).is_zero());
  auto xy = Ring::make({"x", "y"});
  EXPECT_EQ(Ideal(xy, {P(xy, "y")}).normal_form(P(xy, "x")), P(xy, "x"));
}

TEST(NormalForm, IsAProjection) {
  auto r = Ring::make({"x", "y", "z"});
  Ideal i(r, Ps(r, {"x*y - z", "y^2 - x"}));
  Poly p = P(r, "x^3*y^2 + z^2*y - 7*x*z + 1/3");
  Poly nf = i.normal_form(p);
  EXPECT_EQ(i.normal_form(nf), nf);
  EXPECT_TRUE(i.contains(p - nf));
}

TEST(Buchberger, Examples) {
  auto r = Ring::make({"x", "y"});
  auto gb = buchberger({P(r, "x - y")}, r);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], P(r, "x - y"));

  auto gb2 = buchberger(Ps(r, {"x^2", "x*y"}), r);
  EXPECT_EQ(gb2, Ps(r, {"x*y", "x^2"}));

  auto lex = Ring::make({"t", "x", "y"}, MonomialOrder::lex(3));
  auto gb3 = buchberger(Ps(lex, {"x - t^2", "y - t^3"}), lex);
  EXPECT_EQ(gb3, Ps(lex, {"x^3 - y^2", "t*y - x^2", "t*x - y", "t^2 - x"}));
}

TEST(Buchberger, TwistedCubic) {
  auto lex = Ring::make({"t", "x", "y", "z"}, MonomialOrder::lex(4));
  auto gb = buchberger(Ps(lex, {"x - t", "y - t^2", "z - t^3"}), lex);
  EXPECT_EQ(gb, Ps(lex, {"y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y", "t - x"}));
  EXPECT_TRUE(is_groebner_basis(gb));
}

TEST(Buchberger, UnitIdealAndZero) {
  auto r = Ring::make({"x", "y"});
  auto gb = buchberger(Ps(r, {"x*y - 1", "x"}), r);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], Poly::constant(r, 1));
  EXPECT_TRUE(buchberger({Poly(r)}, r).empty());
  EXPECT_TRUE(Ideal(r, Ps(r, {"x*y - 1", "x"})).is_unit());
}

TEST(Buchberger, BudgetIsEnforced) {
  auto r = Ring::make({"a", "b", "c", "d"});
  auto cyclic4 = Ps(r, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"});
  EXPECT_THROW(buchberger(cyclic4, r, GbOptions{2}), ResourceBudgetError);
  EXPECT_NO_THROW(buchberger(cyclic4, r));
}

TEST(Buchberger, Deterministic) {
  auto r = Ring::make({"a", "b", "c", "d"});
  auto gens = Ps(r, {"a*b - c^2", "b*d - a*c", "a^2*d - c^3 + b", "d^2 - a"});
  auto g1 = buchberger(gens, r);
  auto g2 = buchberger(gens, r);
  ASSERT_EQ(g1.size(), g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i) EXPECT_EQ(g1[i].to_string(), g2[i].to_string());
  EXPECT_TRUE(is_groebner_basis(g1));
}

TEST(IdealMember, Examples) {
  auto r = Ring::make({"x", "y"});
  EXPECT_TRUE(ideal_member(P(r, "y"), Ideal(r, Ps(r, {"x", "x + y"}))));
  EXPECT_FALSE(ideal_member(Poly::constant(r, 1), Ideal(r, Ps(r, {"x", "y"}))));
  auto s = Ring::make({"x", "y", "z", "w", "upsilon"});
  EXPECT_TRUE(ideal_member(P(s, "x^2*z - y^2"), Ideal(s, Ps(s, {"x^2*z - y^2 - w*upsilon^2", "upsilon"}))));
}

TEST(IdealMember, AgreesWithSmallCertificateSearch) {
  // Brute force over multipliers of degree ≤ 1 for p = a·(x^2 - y) + b·(x*y - 1).
  auto r = Ring::make({"x", "y"});
  Ideal i(r, Ps(r, {"x^2 - y", "x*y - 1"}));
  std::vector<Poly> basis = Ps(r, {"0", "1", "x", "y", "-x", "x + y"});
  for (const auto& a : basis)
    for (const auto& b : basis) {
      Poly p = a * P(r, "x^2 - y") + b * P(r, "x*y - 1");
      EXPECT_TRUE(i.contains(p));
      EXPECT_FALSE(i.contains(p + P(r, "x")));
    }
}

TEST(IdealEqual, Examples) {
  auto r = Ring::make({"x", "y"});
  EXPECT_TRUE(ideal_equal(Ideal(r, Ps(r, {"x", "y"})), Ideal(r, Ps(r, {"y", "x + y"}))));
  EXPECT_FALSE(ideal_equal(Ideal(r, Ps(r, {"x"})), Ideal(r, Ps(r, {"x^2"}))));
  auto s = Ring::make({"x", "y", "u", "v", "upsilon"});
  EXPECT_TRUE(ideal_equal(Ideal(s, {P(s, "x*v - y*u - upsilon")}), Ideal(s, {P(s, "upsilon - x*v + y*u")})));
  EXPECT_THROW(ideal_equal(Ideal(r, {}), Ideal(s, {})), RingMismatchError);
}

TEST(Eliminate, Examples) {
  auto r = Ring::make({"t", "x", "y"});
  Ideal e = eliminate(Ideal(r, Ps(r, {"x - t^2", "y - t^3"})), {"t"});
  EXPECT_TRUE(ideal_equal(e, Ideal(r, {P(r, "y^2 - x^3")})));
  auto s = Ring::make({"x", "y"});
  EXPECT_TRUE(eliminate(Ideal(s, {P(s, "x - y")}), {"y"}).generators().empty());
  Ideal i(s, Ps(s, {"x^2 - y", "x*y"}));
  EXPECT_TRUE(ideal_equal(eliminate(i, {}), i));
}

TEST(Eliminate, ParametrizationsVanish) {
  auto r = Ring::make({"s", "t", "x", "y", "z"});
  Ideal e = eliminate(Ideal(r, Ps(r, {"x - s*t", "y - s^2", "z - t^2"})), {"s", "t"});
  for (const auto& g : e.generators()) {
    Poly back = substitute(g, {{"x", P(r, "s*t")}, {"y", P(r, "s^2")}, {"z", P(r, "t^2")}});
    EXPECT_TRUE(back.is_zero()) << g.to_string();
  }
  EXPECT_TRUE(ideal_equal(e, Ideal(r, {P(r, "x^2 - y*z")})));
}

TEST(RingMapKernel, Examples) {
  auto src = Ring::make({"X", "Y"});
  auto tgt = Ring::make({"t"});
  Ideal k = ringmap_kernel(RingMap{src, tgt, {}, Ps(tgt, {"t^2", "t^3"})});
  EXPECT_TRUE(ideal_equal(k, Ideal(src, {P(src, "Y^2 - X^3")})));

  auto xy = Ring::make({"x", "y"});
  EXPECT_TRUE(ringmap_kernel(RingMap{src, xy, {}, Ps(xy, {"x", "y"})}).generators().empty());
}

TEST(RingMapKernel, IntoQuotientRing) {
  auto tgt = Ring::make({"x", "y", "u", "v"});
  auto src = Ring::make({"Xx", "Xy", "Xu", "Xv", "Xw"});
  Ideal k = ringmap_kernel(
      RingMap{src, tgt, {P(tgt, "x*v - y*u - 1")}, Ps(tgt, {"x", "y", "u", "v", "x*v - y*u"})});
  EXPECT_TRUE(k.contains(P(src, "Xx*Xv - Xy*Xu - Xw")));
  EXPECT_TRUE(k.contains(P(src, "Xw - 1")));
  for (const auto& g : k.groebner_basis()) {
    Poly image = substitute(g, {{"Xx", P(tgt, "x")}, {"Xy", P(tgt, "y")}, {"Xu", P(tgt, "u")}, {"Xv", P(tgt, "v")},
                                {"Xw", P(tgt, "x*v - y*u")}},
                            tgt);
    EXPECT_TRUE(Ideal(tgt, {P(tgt, "x*v - y*u - 1")}).contains(image));
  }
}

TEST(SubalgebraMember, Examples) {
  auto a = Ring::make({"x", "y", "u", "v", "upsilon"});
  auto w = Ring::make({"Gx", "Gy", "Gu", "Gv"});
  SubalgebraMembership sub(a, {P(a, "x*v - y*u - 1")}, Ps(a, {"x", "y", "u*upsilon", "v*upsilon"}), w);
  auto witness = sub.express(P(a, "upsilon"));
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(*witness, P(w, "Gx*Gv - Gy*Gu"));

  auto xy = Ring::make({"x", "y", "u"});
  auto w2 = Ring::make({"A", "B"});
  EXPECT_FALSE(subalgebra_member(P(xy, "u"), Ps(xy, {"x", "y"}), {}, w2).has_value());
  auto w1 = Ring::make({"A"});
  auto sq = subalgebra_member(P(xy, "x^2"), {P(xy, "x")}, {}, w1);
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(*sq, P(w1, "A^2"));
}

TEST(SubalgebraMember, RelationsOfVeronese) {
  auto xy = Ring::make({"x", "y"});
  auto w = Ring::make({"a", "b", "c"});
  SubalgebraMembership sub(xy, {}, Ps(xy, {"x^2", "x*y", "y^2"}), w);
  EXPECT_TRUE(ideal_equal(sub.relations(), Ideal(w, {P(w, "b^2 - a*c")})));
  EXPECT_FALSE(sub.contains(P(xy, "x")));
  EXPECT_TRUE(sub.contains(P(xy, "x^3*y + y^2")));
}

TEST(LiftCombination, Examples) {
  auto r = Ring::make({"x", "y"});
  auto c = lift_combination(P(r, "y"), Ps(r, {"x", "x + y"}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], P(r, "-1"));
  EXPECT_EQ((*c)[1], P(r, "1"));

  auto z = lift_combination(Poly(r), Ps(r, {"x", "y"}));
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE((*z)[0].is_zero() && (*z)[1].is_zero());

  auto d = lift_combination(P(r, "x*(x + y) - x^2"), {P(r, "x")});
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ((*d)[0], P(r, "y"));

  EXPECT_FALSE(lift_combination(P(r, "1"), Ps(r, {"x", "y"})).has_value());
}

TEST(LiftCombination, Reconstructs) {
  auto r = Ring::make({"x", "y", "z"});
  auto gens = Ps(r, {"x*y - z", "y^2 - x", "z^2 - y"});
  Poly p = P(r, "x^2*y^2 - x*z*y + 3*z^3 - 3*z*y");
  ASSERT_TRUE(Ideal(r, gens).contains(p));
  auto c = lift_combination(p, gens);
  ASSERT_TRUE(c.has_value());
  Poly sum(r);
  for (std::size_t j = 0; j < gens.size(); ++j) sum += (*c)[j] * gens[j];
  EXPECT_EQ(sum, p);
}
