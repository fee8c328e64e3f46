#include "tangency/cohomology_engine.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace tangency {
namespace {

CurveContext curve(int g) { return CurveContext::with_default_points(g); }

TEST(DimsOnSPrime, SpecValues) {
  EXPECT_EQ(dims_on_sprime(curve(2), 2, 2), (CohomologyDims{6, 3, 0}));
  EXPECT_EQ(dims_on_sprime(curve(3), 3, 3).h1, 4);
  EXPECT_EQ(dims_on_sprime(curve(2), 1, 1), (CohomologyDims{3, 3, 0}));
}

TEST(DimsOnSPrime, RejectsNonPositiveDegrees) {
  EXPECT_THROW(dims_on_sprime(curve(2), 0, 1), RangeError);
  EXPECT_THROW(dims_on_sprime(curve(2), 1, 0), RangeError);
}

TEST(DimsOnSPrime, MatchesCurveOracleSum) {
  for (int g = 2; g <= 8; ++g)
    for (int n1 = 1; n1 <= 6; ++n1)
      for (int n2 = 1; n2 <= 6; ++n2) {
        long long h0 = 0, h1 = 0;
        for (int m = 0; m <= n1; ++m) {
          h0 += oracle::h0_pluricanonical(g, n2 - m);
          h1 += oracle::h0_pluricanonical(g, 1 - (n2 - m));
        }
        const auto d = dims_on_sprime(curve(g), n1, n2);
        EXPECT_EQ(d.h0, h0);
        EXPECT_EQ(d.h1, h1);
        EXPECT_EQ(d.h2, 0);
      }
}

TEST(DimsOnSPrime, AgreesWithSurfaceRiemannRoch) {
  for (int g = 2; g <= 10; ++g) {
    const auto ctx = curve(g);
    const SurfaceModel sp(SurfaceKind::SPrime, ctx);
    for (int n1 = 1; n1 <= 7; ++n1)
      for (int n2 = n1; n2 <= 8; ++n2)
        EXPECT_EQ(dims_on_sprime(ctx, n1, n2).chi(),
                  riemann_roch_chi(sp, classes::make(sp, n1, Integer(n2) * (2 * g - 2))))
            << g << " " << n1 << " " << n2;
  }
}

TEST(DimsOnSPrime, FirstCohomologyIsGPlusOne) {
  for (int g = 2; g <= 10; ++g)
    for (int n = 1; n <= 10; ++n) {
      const auto d = dims_on_sprime(curve(g), n, n);
      EXPECT_EQ(d.h1, g + 1);
      EXPECT_EQ(d.h2, 0);
      EXPECT_EQ(d.h0 - 1, Integer(n * n * (g - 1) + 1));
    }
}

TEST(HitchinSystemDims, SpecValues) {
  auto check = [](int g, int n, int genus, int dim) {
    const auto r = hitchin_system_dims(curve(g), n);
    EXPECT_EQ(r.genus_spectral, genus);
    EXPECT_EQ(r.dim_linear_system_sprime, dim);
  };
  check(2, 2, 5, 5);
  check(2, 1, 2, 2);
  check(4, 3, 28, 28);
}

TEST(HitchinSystemDims, GenusMatchesAdjunction) {
  for (int g = 2; g <= 8; ++g)
    for (int n = 1; n <= 8; ++n) {
      const auto ctx = curve(g);
      const SurfaceModel sp(SurfaceKind::SPrime, ctx);
      EXPECT_EQ(hitchin_system_dims(ctx, n).genus_spectral, adjunction_genus(sp, classes::hitchin(sp, n)));
    }
}

TEST(DimsLnnn, SpecValues) {
  EXPECT_EQ(dims_lnnn(curve(2), 3), (CohomologyDims{8, 0, 0}));
  EXPECT_EQ(dims_lnnn(curve(3), 4), (CohomologyDims{30, 0, 0}));
  EXPECT_THROW(dims_lnnn(curve(2), 2), RangeError);
  EXPECT_THROW(dims_lnnn(curve(2), 1), RangeError);
}

TEST(ModuliDimension, SpecValues) {
  EXPECT_EQ(moduli_dim_HT(curve(2), 3), 7);
  EXPECT_EQ(moduli_dim_HT(curve(5), 4), 59);
  EXPECT_THROW(moduli_dim_HT(curve(2), 2), RangeError);
}

TEST(ModuliDimension, ClosedFormAndGenusBookkeeping) {
  for (int g = 2; g <= 10; ++g)
    for (int n = 3; n <= 10; ++n) {
      const auto ctx = curve(g);
      const SurfaceModel st(SurfaceKind::STilde, ctx);
      EXPECT_EQ(moduli_dim_HT(ctx, n), Integer((n * n - 1) * (g - 1) - 1));
      EXPECT_EQ(moduli_dim_HT(ctx, n), dims_lnnn(ctx, n).h0 - 1);
      EXPECT_EQ(adjunction_genus(st, lnnn_class(st, n)), Integer(n * n * (g - 1) + 1));
    }
}

}  // namespace
}  // namespace tangency
