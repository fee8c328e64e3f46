#include "tangency/curve_model.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace tangency {
namespace {

TEST(CurveContext, RejectsLowGenus) {
  EXPECT_THROW(CurveContext::with_default_points(1), RangeError);
  EXPECT_THROW(CurveContext::with_default_points(0), RangeError);
  EXPECT_THROW(CurveContext(1, {}), RangeError);
}

TEST(CurveContext, RequiresDistinctCanonicalPoints) {
  EXPECT_THROW(CurveContext(2, {"a"}), std::invalid_argument);
  EXPECT_THROW(CurveContext(2, {"a", "a"}), std::invalid_argument);
  EXPECT_THROW(CurveContext(3, {"a", "b", "c"}), std::invalid_argument);
  const CurveContext ctx(2, {"a", "b"});
  EXPECT_EQ(ctx.canonical_degree(), 2);
  EXPECT_TRUE(ctx.is_canonical_point("b"));
  EXPECT_FALSE(ctx.is_canonical_point("q"));
}

TEST(CurveModel, PluricanonicalSections) {
  EXPECT_EQ(h0_mK(CurveContext::with_default_points(2), 0), 1);
  EXPECT_EQ(h0_mK(CurveContext::with_default_points(3), 1), 3);
  EXPECT_EQ(h0_mK(CurveContext::with_default_points(2), 2), 3);
  EXPECT_EQ(h0_mK(CurveContext::with_default_points(4), -1), 0);
}

TEST(CurveModel, FirstCohomology) {
  EXPECT_EQ(h1_mK(CurveContext::with_default_points(2), 2), 0);
  EXPECT_EQ(h1_mK(CurveContext::with_default_points(5), 0), 5);
  EXPECT_EQ(h1_mK(CurveContext::with_default_points(3), 1), 1);
}

TEST(CurveModel, AgreesWithRiemannRochOracle) {
  for (int g = 2; g <= 12; ++g) {
    const auto ctx = CurveContext::with_default_points(g);
    for (long long m = -6; m <= 12; ++m) EXPECT_EQ(h0_mK(ctx, m), oracle::h0_pluricanonical(g, m)) << g << " " << m;
  }
}

TEST(CurveModel, SerreDualityAndRiemannRoch) {
  for (int g = 2; g <= 9; ++g) {
    const auto ctx = CurveContext::with_default_points(g);
    for (long long m = -15; m <= 15; ++m) {
      EXPECT_EQ(h1_mK(ctx, m), h0_mK(ctx, 1 - m));
      EXPECT_EQ(h1_mK(ctx, 1 - m), h0_mK(ctx, m));
      EXPECT_EQ(h0_mK(ctx, m) - h1_mK(ctx, m), Integer(m) * (2 * g - 2) - g + 1);
    }
  }
}

TEST(CurveModel, HitchinBaseSum) {
  for (int g = 2; g <= 10; ++g)
    for (int n = 1; n <= 10; ++n) {
      const auto ctx = CurveContext::with_default_points(g);
      Integer sum = 0;
      for (int m = 1; m <= n; ++m) sum += h0_mK(ctx, m);
      EXPECT_EQ(sum, Integer(n * n * (g - 1) + 1));
    }
}

TEST(CurvePointDivisor, SkyscraperDimension) {
  const auto ctx = CurveContext::with_default_points(2);
  EXPECT_EQ(skyscraper_dim(CurvePointDivisor::canonical(ctx)), 2);
  EXPECT_EQ(skyscraper_dim(CurvePointDivisor::canonical(ctx) + CurvePointDivisor::point("q")), 3);
  EXPECT_EQ(skyscraper_dim(CurvePointDivisor::point("p", 3)), 3);
}

TEST(CurvePointDivisor, RejectsNonPositive) {
  EXPECT_THROW(CurvePointDivisor({{"p", 0}}), std::invalid_argument);
  EXPECT_THROW(CurvePointDivisor(std::map<std::string, int>{}), std::invalid_argument);
}

}  // namespace
}  // namespace tangency
