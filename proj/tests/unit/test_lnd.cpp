#include <gtest/gtest.h>

#include "fixture_algebras.hpp"
#include "rees/errors.hpp"
#include "rees/poly_ops.hpp"

using namespace rees;
using namespace rees::testing;

TEST(Derivation, AppliesLeibnizRule) {
  auto d = sl2();
  const auto& r = d.ring();
  EXPECT_EQ(d.apply(P(r, "u*v")), d.algebra().reduce(P(r, "u*y + v*x")));
  EXPECT_TRUE(d.algebra().is_zero(d.iterate(P(r, "u*v"), 2) - P(r, "2*x*y")));
  EXPECT_TRUE(d.apply(P(r, "x")).is_zero());
  EXPECT_TRUE(d.apply(P(r, "x*v - y*u")).is_zero());
}

TEST(Derivation, ExamplesOnPolynomialRings) {
  auto d = intro();
  const auto& r = d.ring();
  EXPECT_EQ(d.apply(P(r, "t^2")), P(r, "2*t"));
  auto tri = triangular();
  const auto& s = tri.ring();
  EXPECT_EQ(tri.apply(P(s, "z")), P(s, "2*y"));
  EXPECT_EQ(tri.iterate(P(s, "z"), 2), P(s, "2*x^2"));
  EXPECT_TRUE(tri.iterate(P(s, "z"), 3).is_zero());
  EXPECT_TRUE(tri.apply(P(s, "x^2*z - y^2")).is_zero());
}

TEST(Derivation, ZeroAndExtension) {
  auto d = sl2();
  auto z = Derivation::zero(d.algebra());
  EXPECT_TRUE(z.apply(P(d.ring(), "u*v + x")).is_zero());
  auto bigger = d.algebra().adjoin({"s"});
  auto e = d.extend_to(bigger);
  EXPECT_TRUE(e.apply(P(bigger.ring(), "s")).is_zero());
  EXPECT_EQ(e.apply(P(bigger.ring(), "s*u")), P(bigger.ring(), "s*x"));
}

TEST(Derivation, ImageCountMustMatch) {
  auto r = Ring::make({"x", "y"});
  EXPECT_THROW(Derivation(QuotientAlgebra(r), {P(r, "1")}), InvalidArgumentError);
}

TEST(CheckDerivation, AcceptsFixtures) {
  for (const auto& f : all_fixtures()) {
    auto c = check_derivation(f.make());
    EXPECT_TRUE(c.well_defined) << f.name;
  }
}

TEST(CheckDerivation, ReportsOffendingRelation) {
  auto r = Ring::make({"x"});
  Derivation d(QuotientAlgebra(r, {P(r, "x^2")}), {P(r, "1")});
  auto c = check_derivation(d);
  EXPECT_FALSE(c.well_defined);
  ASSERT_TRUE(c.offending_relation.has_value());
  EXPECT_EQ(*c.offending_relation, P(r, "x^2"));
  EXPECT_EQ(*c.offending_image, P(r, "2*x"));
}

TEST(NilDegree, Examples) {
  auto d = sl2();
  const auto& r = d.ring();
  EXPECT_EQ(nil_degree(d, P(r, "u*v")), 2);
  EXPECT_EQ(nil_degree(d, P(r, "x")), 0);
  EXPECT_EQ(nil_degree(d, P(r, "u^3")), 3);
  EXPECT_EQ(nil_degree(d, Poly(r)), 0);
  auto w = winkelmann();
  EXPECT_EQ(nil_degree(w, P(w.ring(), "z")), 1);
  EXPECT_EQ(nil_degree(w, P(w.ring(), "x*v - y*u")), 0);
}

TEST(NilDegree, ThrowsPastBound) {
  auto r = Ring::make({"x"});
  Derivation d(QuotientAlgebra(r), {P(r, "x")});
  EXPECT_THROW(nil_degree(d, P(r, "x"), 10), NilpotencyError);
  auto rep = is_locally_nilpotent(d, 10);
  EXPECT_FALSE(rep.locally_nilpotent);
  ASSERT_EQ(rep.variable_degrees.size(), 1u);
  EXPECT_FALSE(rep.variable_degrees[0].has_value());
}

TEST(IsLocallyNilpotent, Fixtures) {
  for (const auto& f : all_fixtures()) EXPECT_TRUE(is_locally_nilpotent(f.make()).locally_nilpotent) << f.name;
  auto rep = is_locally_nilpotent(triangular());
  std::vector<std::optional<int>> expected{0, 1, 2, 0};
  EXPECT_EQ(rep.variable_degrees, expected);
}

TEST(Filtration, Membership) {
  auto d = sl2();
  const auto& r = d.ring();
  EXPECT_TRUE(in_filtration(d, P(r, "u*v"), 2));
  EXPECT_FALSE(in_filtration(d, P(r, "u*v"), 1));
  EXPECT_TRUE(in_filtration(d, Poly(r), 0));
  EXPECT_TRUE(in_filtration(d, P(r, "x*v - y*u"), 0));
}

TEST(DividedPower, Examples) {
  auto d = sl2();
  const auto& r = d.ring();
  EXPECT_TRUE(d.algebra().equal(divided_power(d, P(r, "u*v"), 2), P(r, "x*y")));
  EXPECT_EQ(divided_power(d, P(r, "u*v"), 0), d.algebra().reduce(P(r, "u*v")));
}

TEST(ExpT, Examples) {
  auto d = sl2();
  const auto& r = d.ring();
  Poly e = exp_t(d, P(r, "u*v"), "s");
  const auto& s = e.ring();
  QuotientAlgebra as = d.algebra().adjoin({"s"});
  EXPECT_TRUE(as.equal(e, P(s, "u*v + s*(u*y + v*x) + s^2*x*y")));
  EXPECT_THROW(exp_t(d, P(r, "u"), "x"), InvalidArgumentError);

  auto i = intro();
  Poly et = exp_t(i, P(i.ring(), "t^2"), "s");
  EXPECT_EQ(et, P(et.ring(), "t^2 + 2*s*t + s^2"));
}

TEST(ExpT, IsAHomomorphismOnGenerators) {
  auto d = danielewski();
  const auto& r = d.ring();
  Poly a = P(r, "y*z"), b = P(r, "y + z^2");
  QuotientAlgebra at = d.algebra().adjoin({"t"});
  EXPECT_TRUE(at.equal(exp_t(d, a * b), exp_t(d, a) * exp_t(d, b)));
  EXPECT_TRUE(at.equal(exp_t(d, a + b), exp_t(d, a) + exp_t(d, b)));
}

TEST(QuotientAlgebra, AdjoinKeepsRelations) {
  auto d = sl2();
  auto big = d.algebra().adjoin({"w"});
  EXPECT_EQ(big.ring()->size(), 5u);
  EXPECT_TRUE(big.is_zero(P(big.ring(), "x*v - y*u - 1")));
  EXPECT_THROW(d.algebra().adjoin({"x"}), InvalidArgumentError);
}
