#include "tangency/laurent.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace tangency {
namespace {

Expr sym(const std::string& s, int e = 1) { return Expr::symbol(s, e); }

TEST(Monomial, ProductsAndInverse) {
  const Monomial x = Monomial::symbol("x"), y = Monomial::symbol("y", 2);
  EXPECT_EQ((x * y).str(), "x*y^2");
  EXPECT_TRUE((x * x.inverse()).is_one());
  EXPECT_EQ(y.pow(-1).str(), "y^-2");
  EXPECT_EQ((x * y).without("y").str(), "x");
  EXPECT_EQ(Monomial{}.str(), "1");
}

TEST(Expr, CanonicalString) {
  EXPECT_EQ((sym("b") + sym("a") - 2).str(), "-2 + a + b");
  EXPECT_EQ((sym("a") - sym("a")).str(), "0");
  EXPECT_EQ(((sym("x") + 1) * (sym("x") - 1)).str(), "-1 + x^2");
  EXPECT_EQ((Expr(3) * sym("z", -1)).str(), "3*z^-1");
}

TEST(Expr, Units) {
  EXPECT_TRUE(sym("z", -1).is_unit());
  EXPECT_TRUE((-sym("z")).is_unit());
  EXPECT_FALSE((Expr(2) * sym("z")).is_unit());
  EXPECT_FALSE((sym("z") + 1).is_unit());
  EXPECT_EQ(sym("z", 2).unit_inverse(), sym("z", -2));
  EXPECT_THROW((sym("z") + 1).unit_inverse(), std::domain_error);
}

TEST(Expr, EvaluateAgreesWithRingOperations) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  const Expr p = (sym("x") + sym("y", -1)) * (sym("x") - 3) + sym("x", 2) * sym("y");
  const Expr q = sym("y") - sym("x", -1) + 5;
  for (int trial = 0; trial < 50; ++trial) {
    const std::map<std::string, std::complex<double>> at{{"x", {u(rng), u(rng)}}, {"y", {u(rng), u(rng)}}};
    EXPECT_LT(std::abs(evaluate(p * q, at) - evaluate(p, at) * evaluate(q, at)), 1e-9);
    EXPECT_LT(std::abs(evaluate(p + q, at) - evaluate(p, at) - evaluate(q, at)), 1e-9);
  }
  EXPECT_THROW(evaluate(sym("w"), {}), std::invalid_argument);
}

TEST(RewriteSystem, RejectsDuplicatesAndCycles) {
  RewriteSystem rs;
  rs.add_rule("a", Monomial::symbol("b"));
  EXPECT_THROW(rs.add_rule("a", Monomial::symbol("c")), std::invalid_argument);
  rs.add_rule("b", Monomial::symbol("c"));
  EXPECT_THROW(rs.add_rule("c", Monomial::symbol("a")), std::invalid_argument);
  EXPECT_THROW(rs.add_rule("d", Monomial::symbol("d")), std::invalid_argument);
}

TEST(RewriteSystem, NormalizesThroughChains) {
  RewriteSystem rs;
  rs.add_rule("z_1", Monomial::symbol("g_0_1") * Monomial::symbol("z_0"));
  rs.add_rule("g_0_2", Monomial::symbol("g_0_1") * Monomial::symbol("g_1_2"));
  rs.add_rule("g_1_1", Monomial{});
  const Expr e = sym("z_1", 2) * sym("g_0_2", -1) + sym("g_1_1");
  const Expr n = rs.normalize(e);
  EXPECT_TRUE(rs.is_normal(n));
  EXPECT_EQ(n.str(), "1 + g_0_1*g_1_2^-1*z_0^2");
}

TEST(RewriteSystem, OrderIndependence) {
  RewriteSystem rs;
  rs.add_rule("c", Monomial::symbol("a") * Monomial::symbol("b", -1));
  rs.add_rule("d", Monomial::symbol("c", 2));
  rs.add_rule("e", Monomial::symbol("d") * Monomial::symbol("c"));
  rs.add_rule("f", Monomial{});
  const Expr expr = sym("e") * sym("f", 3) + sym("d", -1) * sym("a") - sym("c") * sym("e", 2) + 7;
  const Expr reference = rs.normalize(expr);
  std::vector<std::string> order{"c", "d", "e", "f"};
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(rs.normalize_in_order(expr, order), reference);
  }
  std::vector<std::string> trace;
  EXPECT_EQ(rs.normalize_traced(expr, trace), reference);
  EXPECT_FALSE(trace.empty());
}

TEST(RewriteSystem, ReplaceRuleKeepsAcyclicity) {
  RewriteSystem rs;
  rs.add_rule("a", Monomial::symbol("b"));
  rs.add_rule("b", Monomial::symbol("c"));
  rs.replace_rule("a", Monomial::symbol("c", 2));
  EXPECT_EQ(rs.normalize(sym("a")), sym("c", 2));
  EXPECT_THROW(rs.replace_rule("c", Monomial::symbol("a")), std::invalid_argument);
}

}  // namespace
}  // namespace tangency
