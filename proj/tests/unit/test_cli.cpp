#include <gtest/gtest.h>

#include <sstream>

#include "fixture_algebras.hpp"
#include "rees/cli/commands.hpp"
#include "rees/errors.hpp"

using namespace rees;
using namespace rees::cli;
using rees::testing::P;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run reesctl(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(REES_FIXTURES_DIR) + "/" + name + ".spec"; }

}  // namespace

TEST(ExprParser, Precedence) {
  auto r = Ring::make({"x", "y"});
  EXPECT_EQ(parse_expression("-x^2", r), P(r, "-(x^2)"));
  EXPECT_EQ(parse_expression("2*x + 3*y*x - 1/2", r).to_string(), "3*x*y + 2*x - 1/2");
  EXPECT_EQ(parse_expression("(x + y)^2", r), parse_expression("x^2 + 2*x*y + y^2", r));
  EXPECT_EQ(parse_expression("x - -y", r), parse_expression("x + y", r));
}

TEST(ExprParser, RoundTrip) {
  auto r = Ring::make({"x", "y", "u", "v", "upsilon"});
  for (const char* text : {"x*v - y*u - upsilon", "-1/3*x^4*y + 7", "0", "u^10 - v^10", "x*y*u*v*upsilon"}) {
    Poly p = parse_expression(text, r);
    EXPECT_EQ(parse_expression(p.to_string(), r), p) << text;
  }
}

TEST(ExprParser, ErrorPositions) {
  auto r = Ring::make({"x", "y"});
  try {
    parse_expression("x + 2x", r, 3, 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 15);
  }
  try {
    parse_expression("x + q", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5);
    EXPECT_NE(std::string(e.what()).find("unknown variable"), std::string::npos);
  }
  EXPECT_THROW(parse_expression("x +", r), ParseError);
  EXPECT_THROW(parse_expression("(x", r), ParseError);
  EXPECT_THROW(parse_expression("x^-1", r), ParseError);
  EXPECT_THROW(parse_expression("1/0", r), ParseError);
  EXPECT_THROW(parse_expression("", r), ParseError);
}

TEST(ExprParser, Identifiers) {
  EXPECT_TRUE(is_identifier("w1"));
  EXPECT_TRUE(is_identifier("_a"));
  EXPECT_FALSE(is_identifier("1w"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("a-b"));
}

TEST(SpecFile, ParsesSections) {
  auto s = parse_spec(
      "# comment\nring: x, y,\n  u, v\nrelations: x*v - y*u - 1\nderivation: u -> x\n  v -> y\noptions: bound = 8; "
      "max-iter = 3; max-pairs = 100\n");
  EXPECT_EQ(s.ring->names(), (std::vector<std::string>{"x", "y", "u", "v"}));
  ASSERT_EQ(s.relations.size(), 1u);
  EXPECT_EQ(s.images[2], P(s.ring, "x"));
  EXPECT_EQ(s.images[3], P(s.ring, "y"));
  EXPECT_TRUE(s.images[0].is_zero());
  EXPECT_EQ(s.options.bound, 8);
  EXPECT_EQ(s.options.max_iter, 3);
  EXPECT_EQ(s.options.max_pairs, 100u);
}

TEST(SpecFile, Errors) {
  EXPECT_THROW(parse_spec("ring: x, upsilon\n"), InvalidArgumentError);
  EXPECT_THROW(parse_spec("ring: x\nring: y\n"), InvalidArgumentError);
  EXPECT_THROW(parse_spec("ring: x\noptions: speed = 2\n"), InvalidArgumentError);
  EXPECT_THROW(parse_spec("ring: x\nderivation: y -> x\n"), InvalidArgumentError);
  EXPECT_THROW(parse_spec("derivation: x -> 1\n"), InvalidArgumentError);
  try {
    parse_spec("ring: x, y\nderivation: y -> 2x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 19);
  }
}

TEST(SpecFile, Validate) {
  auto s = parse_spec("ring: x\nderivation: x -> x\n");
  EXPECT_THROW(validate(spec_derivation(s), 8), NilpotencyError);
  auto t = parse_spec("ring: x\nrelations: x^2\nderivation: x -> 1\n");
  EXPECT_THROW(validate(spec_derivation(t), 8), DerivationError);
}

TEST(Commands, Check) {
  auto ok = reesctl({"check", fixture("sl2")});
  EXPECT_EQ(ok.code, kOk) << ok.err;
  EXPECT_EQ(reesctl({"check", fixture("semisimple")}).code, kMathFailure);
  EXPECT_EQ(reesctl({"check", fixture("not_well_defined")}).code, kMathFailure);
}

TEST(Commands, InputErrors) {
  auto bad = reesctl({"check", fixture("bad_syntax")});
  EXPECT_EQ(bad.code, kInputError);
  EXPECT_NE(bad.err.find("2:19"), std::string::npos) << bad.err;
  EXPECT_EQ(reesctl({"check", fixture("does_not_exist")}).code, kInputError);
  EXPECT_EQ(reesctl({"frobnicate"}).code, kInputError);
  EXPECT_EQ(reesctl({"degree", fixture("sl2"), "--element", "q"}).code, kInputError);
}

TEST(Commands, Rees) {
  auto r = reesctl({"rees", fixture("sl2")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("x:0 y:0 u:1 v:1 upsilon:1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x*v - y*u - upsilon"), std::string::npos) << r.out;
  auto capped = reesctl({"rees", fixture("triangular_capped")});
  EXPECT_EQ(capped.code, kMathFailure);
  EXPECT_NE(capped.out.find("not terminated"), std::string::npos);
  auto overridden = reesctl({"rees", fixture("triangular_capped"), "--max-iter", "4"});
  EXPECT_EQ(overridden.code, kOk);
}

TEST(Commands, Budget) { EXPECT_EQ(reesctl({"rees", fixture("sl2"), "--max-pairs", "3"}).code, kBudgetExceeded); }

TEST(Commands, DegreeAndMember) {
  auto d = reesctl({"degree", fixture("sl2"), "--element", "u*v"});
  EXPECT_EQ(d.code, kOk);
  EXPECT_EQ(d.out, "2\n");
  auto m = reesctl({"member", fixture("sl2"), "--element", "u*v", "--level", "1"});
  EXPECT_EQ(m.code, kOk);
  EXPECT_EQ(m.out, "false\n");
}

TEST(Commands, Modify) {
  auto m = reesctl({"modify", fixture("plane"), "--ideal", "x; y", "--divisor", "x", "--verify-lemma"});
  EXPECT_EQ(m.code, kOk) << m.err;
  EXPECT_NE(m.out.find("t2 -> 1"), std::string::npos) << m.out;
  auto bad = reesctl({"modify", fixture("plane"), "--ideal", "y", "--divisor", "y"});
  EXPECT_EQ(bad.code, kMathFailure);
  EXPECT_NE(bad.out.find("invariance:"), std::string::npos);
}
