#pragma once

// Spectral-curve descriptors assembled from characteristic-coefficient data.

#include "tangency/cohomology_engine.hpp"
#include "tangency/core.hpp"
#include "tangency/curve_model.hpp"
#include "tangency/elm_engine.hpp"
#include "tangency/picard_lattice.hpp"
#include "tangency/residue_tangency.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tangency {

/// Class of a degree-n spectral curve on SPrime: n C'_0 + n K f'.
inline DivClass class_in_sprime(const CurveContext& ctx, long long n) {
  if (n < 1) throw RangeError("spectral degree must be at least 1");
  return classes::hitchin(SurfaceModel(SurfaceKind::SPrime, ctx), n);
}

/// dim of the Hitchin base, sum_{m=1}^n h0(mK); checked against n^2(g-1)+1.
inline Integer hitchin_base_dim(const CurveContext& ctx, long long n) {
  if (n < 1) throw RangeError("spectral degree must be at least 1");
  Integer total = 0;
  for (long long m = 1; m <= n; ++m) total += h0_mK(ctx, m);
  const Integer expected = Integer(n) * n * (ctx.genus() - 1) + 1;
  if (total != expected)
    throw InternalError("Hitchin base dimension " + total.str() + " differs from n^2(g-1)+1 = " + expected.str());
  return total;
}

/// Characteristic-coefficient data: dims of H^0(mK) for the coefficients a_m
/// and the local leading data over each canonical point.
struct HiggsCharData {
  CurveContext ctx;
  int n;
  std::vector<Integer> coefficient_dims;  // h0(mK), m = 1..n
  SpectralLocalData local;

  static HiggsCharData from_local(SpectralLocalData local) {
    local.validate();
    std::vector<Integer> dims;
    for (int m = 1; m <= local.n; ++m) dims.push_back(h0_mK(local.ctx, m));
    return HiggsCharData{local.ctx, local.n, std::move(dims), std::move(local)};
  }

  void validate() const {
    if (static_cast<int>(coefficient_dims.size()) != n)
      throw std::invalid_argument("need one coefficient dimension per degree 1..n");
    Integer sum = 0;
    for (const auto& d : coefficient_dims) sum += d;
    if (sum != hitchin_base_dim(ctx, n))
      throw std::invalid_argument("coefficient dimensions do not add up to the Hitchin base dimension");
    local.validate();
  }
};

struct PointAnalysis {
  std::string id;
  std::vector<Complex> tails;
  PointStatus status = PointStatus::Ordinary;
};

struct GenusTriple {
  Integer on_sprime;  // smooth spectral curve
  Integer on_s;       // arithmetic genus of the image in S
  Integer on_stilde;  // strict transform after blowing up sigma(K)
};

struct SpectralDescriptor {
  DivClass class_sprime;
  DivClass class_s;
  DivClass class_stilde;
  GenusTriple genera;
  GenusAccounting accounting;
  std::vector<PointAnalysis> points;
  std::optional<TangencyReport> tangency;
};

inline SpectralDescriptor build(const HiggsCharData& data, double tolerance = 1e-8) {
  data.validate();
  const CurveContext& ctx = data.ctx;
  const SurfaceModel sprime(SurfaceKind::SPrime, ctx), s(SurfaceKind::S, ctx), stilde(SurfaceKind::STilde, ctx);

  SpectralDescriptor out;
  out.class_sprime = class_in_sprime(ctx, data.n);
  out.class_s = elm_divisor_transport(out.class_sprime);
  out.class_stilde = lnnn_class(stilde, data.n);
  out.genera = {adjunction_genus(sprime, out.class_sprime), adjunction_genus(s, out.class_s),
                adjunction_genus(stilde, out.class_stilde)};

  std::vector<PointStatus> status;
  for (const auto& p : data.local.points) {
    PointAnalysis pa{p.id, leading_tails(data.n, p.abar, tolerance), PointStatus::Ordinary};
    pa.status = classify(is_ordinary_n_fold(pa.tails, tolerance));
    status.push_back(pa.status);
    out.points.push_back(std::move(pa));
  }
  out.accounting = genus_accounting(ctx, data.n, status);
  if (out.accounting.arithmetic_genus != out.genera.on_s || out.accounting.delta_total + out.genera.on_stilde != out.genera.on_s)
    throw InternalError("genus accounting does not close against adjunction");
  if (data.local.has_lambda()) out.tangency = check_tangency(data.local, tolerance);
  return out;
}

}  // namespace tangency
