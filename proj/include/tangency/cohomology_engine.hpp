#pragma once

// Cohomology of the divisor families that carry spectral curves, and the
// dimensions of the associated linear systems.

#include "tangency/core.hpp"
#include "tangency/curve_model.hpp"
#include "tangency/picard_lattice.hpp"

#include <string>

namespace tangency {

struct CohomologyDims {
  Integer h0 = 0;
  Integer h1 = 0;
  Integer h2 = 0;

  Integer chi() const { return h0 - h1 + h2; }
  bool operator==(const CohomologyDims&) const = default;
};

/// h^i(O_{S'}(n1 C'_0 + n2 K f')) from the pushforward decomposition
///   pi_* O(n1 C'_0 + n2 K f') = sum_{m=0}^{n1} O((n2 - m) K),
/// valid for n1, n2 > 0. h^2 vanishes because curves have no h^2.
inline CohomologyDims dims_on_sprime(const CurveContext& ctx, long long n1, long long n2) {
  if (n1 <= 0 || n2 <= 0)
    throw RangeError("pushforward decomposition needs n1, n2 > 0 (got " + std::to_string(n1) + ", " +
                     std::to_string(n2) + ")");
  CohomologyDims d;
  for (long long m = 0; m <= n1; ++m) {
    d.h0 += h0_mK(ctx, n2 - m);
    d.h1 += h1_mK(ctx, n2 - m);
  }
  return d;
}

struct HitchinSystemDims {
  Integer genus_spectral;
  Integer dim_linear_system_sprime;
  CohomologyDims dims;
};

/// Genus of a smooth degree-n spectral curve and dim |nC'_0 + nK f'|.
inline HitchinSystemDims hitchin_system_dims(const CurveContext& ctx, long long n) {
  if (n < 1) throw RangeError("spectral degree must be at least 1");
  HitchinSystemDims r;
  r.dims = dims_on_sprime(ctx, n, n);
  r.genus_spectral = Integer(n) * n * (ctx.genus() - 1) + 1;
  r.dim_linear_system_sprime = r.dims.h0 - 1;
  return r;
}

/// (h0, h1, h2) of L_{n,n,n} on STilde for n > 2.
///
/// h1 = h2 = 0 rests on Kodaira vanishing for K + D with D the vanishing
/// witness class; the generator test for D runs first and its failure is an
/// internal error. h0 then equals the Riemann-Roch characteristic.
inline CohomologyDims dims_lnnn(const CurveContext& ctx, long long n) {
  if (n <= 2) throw RangeError("h^i(L_{n,n,n}) is only established for n > 2, got n = " + std::to_string(n));
  const SurfaceModel stilde(SurfaceKind::STilde, ctx);
  const AmpleReport amp = is_ample_generator_test(stilde, lnnn_vanishing_witness(stilde, n));
  if (!amp.positive)
    throw InternalError("vanishing witness failed the ampleness generator test at n = " + std::to_string(n));
  // L - K_{STilde} must be the witness class for Kodaira vanishing to apply.
  const DivClass l = lnnn_class(stilde, n);
  if (l - canonical_class(stilde) != lnnn_vanishing_witness(stilde, n))
    throw InternalError("L_{n,n,n} - K is not the vanishing witness");
  return CohomologyDims{riemann_roch_chi(stilde, l), 0, 0};
}

/// Dimension of the moduli of Hitchin tangential covers: dim |L_{n,n,n}|.
inline Integer moduli_dim_HT(const CurveContext& ctx, long long n) { return dims_lnnn(ctx, n).h0 - 1; }

}  // namespace tangency
