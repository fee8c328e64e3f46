// One line per acceptance criterion; exit status is nonzero if any fails.

#include "tangency/cohomology_engine.hpp"
#include "tangency/elm_engine.hpp"
#include "tangency/residue_tangency.hpp"
#include "tangency/spectral_builder.hpp"
#include "tangency/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "oracles.hpp"

using namespace tangency;

namespace {

constexpr double kTolerance = 1e-8;
constexpr double kSeparation = 1e-3;
constexpr int kTailTrials = 1000;
constexpr int kAtlases = 100;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome grid_dimensions() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 6; ++n)
    for (int g = 2; g <= 6; ++g) {
      const auto ctx = CurveContext::with_default_points(g);
      const SurfaceModel sp(SurfaceKind::SPrime, ctx);
      const Integer expected = n * n * (g - 1) + 1;
      const Integer by_sum = dims_on_sprime(ctx, n, n).h0 - 1;
      const Integer by_rr = riemann_roch_chi(sp, class_in_sprime(ctx, n)) + (g + 1) - 1;
      if (by_sum != expected || by_rr != expected)
        o.fail("n=" + std::to_string(n) + " g=" + std::to_string(g) + ": " + by_sum.str() + " / " + by_rr.str());
    }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.fail("runtime " + std::to_string(dt) + " s");
  if (o.ok) o.detail = "30 grid points, " + std::to_string(dt) + " s";
  return o;
}

Outcome first_cohomology() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (int g = 2; g <= 6; ++g) {
      const auto d = dims_on_sprime(CurveContext::with_default_points(g), n, n);
      if (d.h1 != g + 1 || d.h2 != 0) o.fail("n=" + std::to_string(n) + " g=" + std::to_string(g));
    }
  return o;
}

Outcome genus_closure() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (int g = 2; g <= 6; ++g) {
      const auto ctx = CurveContext::with_default_points(g);
      const SurfaceModel sp(SurfaceKind::SPrime, ctx), s(SurfaceKind::S, ctx), st(SurfaceKind::STilde, ctx);
      const Integer on_s = adjunction_genus(s, classes::hitchin(s, n));
      const Integer on_st = adjunction_genus(st, lnnn_class(st, n));
      const Integer on_sp = adjunction_genus(sp, class_in_sprime(ctx, n));
      const Integer drop = (2 * g - 2) * n * (n - 1) / 2;
      if (on_s != (2 * n * n - n) * (g - 1) + 1 || on_s - drop != on_st || on_st != on_sp ||
          on_sp != n * n * (g - 1) + 1)
        o.fail("n=" + std::to_string(n) + " g=" + std::to_string(g));
    }
  return o;
}

Outcome moduli_dimension() {
  Outcome o;
  for (int n = 3; n <= 6; ++n)
    for (int g = 2; g <= 6; ++g) {
      const auto ctx = CurveContext::with_default_points(g);
      const SurfaceModel st(SurfaceKind::STilde, ctx);
      const auto amp = is_ample_generator_test(st, lnnn_vanishing_witness(st, n));
      if (!amp.positive || amp.self_intersection != (n * n - 5) * (2 * g - 2)) o.fail("generator test n=" + std::to_string(n));
      const auto d = dims_lnnn(ctx, n);
      if (d.h1 != 0 || d.h2 != 0 || d.h0 - 1 != (n * n - 1) * (g - 1) - 1 || moduli_dim_HT(ctx, n) != d.h0 - 1)
        o.fail("n=" + std::to_string(n) + " g=" + std::to_string(g));
    }
  for (int g = 2; g <= 6; ++g) {
    try {
      dims_lnnn(CurveContext::with_default_points(g), 2);
      o.fail("n=2 was not refused");
    } catch (const RangeError&) {
    }
  }
  return o;
}

Outcome hitchin_base() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (int g = 2; g <= 6; ++g) {
      const auto ctx = CurveContext::with_default_points(g);
      Integer sum = 0;
      for (int m = 1; m <= n; ++m) sum += h0_mK(ctx, m);
      if (sum != n * n * (g - 1) + 1 || hitchin_base_dim(ctx, n) != sum) o.fail("n=" + std::to_string(n));
    }
  return o;
}

Outcome cocycle_and_determinant() {
  Outcome o;
  std::mt19937_64 rng(20240229);
  int triples = 0;
  for (int a = 0; a < kAtlases; ++a) {
    const auto atlas = ChartAtlas::random(rng, 8);
    if (atlas.num_charts() > 8) o.fail("atlas too large");
    for (const auto& [i, j, k] : atlas.triples()) {
      ++triples;
      if (!verify_cocycle(atlas, i, j, k).holds) o.fail("cocycle fails in atlas " + std::to_string(a));
    }
    if (!det_is_trivial(atlas)) o.fail("determinant in atlas " + std::to_string(a));
  }
  const auto control = ChartAtlas::from_point_charts({true, true, true}).with_corrupted_rule("g_0_2", Monomial::symbol("g_0_1"));
  if (verify_cocycle(control, 0, 1, 2).holds) o.fail("mutated rule not detected");
  if (o.ok) o.detail = std::to_string(kAtlases) + " atlases, " + std::to_string(triples) + " triples, mutant rejected";
  return o;
}

Outcome tail_round_trip() {
  Outcome o;
  std::mt19937_64 rng(20240229);
  std::uniform_int_distribution<int> degree(1, 6);
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int trial = 0; trial < kTailTrials; ++trial) {
    const int n = degree(rng);
    const auto c = detail::random_tails(rng, n, kSeparation);
    const auto p = oracle::expand_linear_factors(c);
    try {
      const auto back = leading_tails(n, {p.begin() + 1, p.end()}, kTolerance);
      worst = std::max(worst, multiset_distance(back, c));
    } catch (const RootFindingError& e) {
      o.fail(std::string("trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  const double dt = seconds_since(t0);
  if (worst > kTolerance) o.fail("max distance " + std::to_string(worst));
  if (dt >= 5.0) o.fail("runtime " + std::to_string(dt) + " s");
  if (o.ok) {
    std::ostringstream os;
    os << kTailTrials << " trials, max distance " << worst << ", " << dt << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome tangency_verdicts() {
  Outcome o;
  std::mt19937_64 rng(20240229);
  const auto ctx = CurveContext::with_default_points(3);
  SpectralLocalData data{ctx, 4, {}};
  for (const auto& id : ctx.canonical_points()) {
    const auto c = detail::random_tails(rng, 4, 1e-2);
    const auto p = oracle::expand_linear_factors(c);
    data.points.push_back({id, {p.begin() + 1, p.end()}, c});
  }
  if (!check_tangency(data, kTolerance).pass) o.fail("matching data did not pass");

  auto perturbed = data;
  (*perturbed.points[1].lambda)[2] += 1.0;
  const auto bad = check_tangency(perturbed, kTolerance);
  if (bad.pass || bad.residual_poles.empty() || bad.residual_poles.front().point != data.points[1].id)
    o.fail("perturbation not reported at " + data.points[1].id);

  for (const auto* base : {&data, &perturbed}) {
    auto relabeled = *base;
    for (auto& pt : relabeled.points) std::shuffle(pt.lambda->begin(), pt.lambda->end(), rng);
    if (check_tangency(relabeled, kTolerance).pass != check_tangency(*base, kTolerance).pass)
      o.fail("verdict changed under relabeling");
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  VerifyOptions opt;
  opt.tolerance = kTolerance;
  int checks = 0;
  for (const auto& r : run_all_suites(opt)) {
    checks += r.checks;
    if (!r.passed()) o.fail(r.name + ": " + (r.failures.empty() ? "" : r.failures.front()));
  }
  const int code = std::system((std::string("\"") + TANGENCY_CLI + "\" verify > /dev/null").c_str());
  if (code != 0) o.fail("verify exited with status " + std::to_string(code));
  if (o.ok) o.detail = std::to_string(checks) + " checks, verify exit 0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dimension grid via pushforward and Riemann-Roch", grid_dimensions},
      {"h1 = g+1 and h2 = 0 on the grid", first_cohomology},
      {"genus triple closure", genus_closure},
      {"dim |L_{n,n,n}| for 3 <= n <= 6, n = 2 refused", moduli_dimension},
      {"Hitchin base identity", hitchin_base},
      {"cocycle and determinant over random atlases", cocycle_and_determinant},
      {"tail round trip", tail_round_trip},
      {"tangency verdicts", tangency_verdicts},
      {"invariant suites and verify", property_suites},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[k].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
