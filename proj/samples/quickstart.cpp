// Genus and linear-system dimensions for a degree-3 spectral curve over a
// genus-2 curve, and the tangency verdict for matching local data.

#include "tangency/cohomology_engine.hpp"
#include "tangency/spectral_builder.hpp"
#include "tangency/spectral_io.hpp"

#include <iostream>

int main() {
  using namespace tangency;
  const CurveContext ctx = CurveContext::with_default_points(2);
  const auto sys = hitchin_system_dims(ctx, 3);
  std::cout << "genus of spectral curve: " << sys.genus_spectral << "\n";
  std::cout << "dim |3C'_0 + 3Kf'|: " << sys.dim_linear_system_sprime << "\n";
  std::cout << "dim |L_{3,3,3}|: " << moduli_dim_HT(ctx, 3) << "\n";

  SpectralLocalData data{ctx, 2, {}};
  for (const auto& q : ctx.canonical_points()) data.points.push_back({q, {3.0, 2.0}, std::vector<Complex>{1.0, 2.0}});
  std::cout << spectral_report_text(build(HiggsCharData::from_local(data)));
}
