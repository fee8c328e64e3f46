#pragma once

// Randomized and exhaustive invariant suites behind the `verify` command.

#include "tangency/cohomology_engine.hpp"
#include "tangency/curve_model.hpp"
#include "tangency/elm_engine.hpp"
#include "tangency/picard_lattice.hpp"
#include "tangency/residue_tangency.hpp"
#include "tangency/spectral_builder.hpp"
#include "tangency/tables.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tangency {

struct VerifyOptions {
  std::uint64_t seed = 20240229;
  double tolerance = 1e-8;
  GridConfig grid{};
  /// Mutation hook: "canonical-class" or "cocycle-rule".
  std::string fault;
};

struct SuiteResult {
  std::string name;
  long long checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok && failures.size() < 8) failures.push_back(describe());
    else if (!ok) failures.back() = "(further failures suppressed)";
  }
};

namespace detail {

inline DivClass canonical_for_suite(const SurfaceModel& s, const VerifyOptions& opt) {
  DivClass k = canonical_class(s);
  if (opt.fault == "canonical-class") k.fdeg += 1;
  return k;
}

template <class Rng>
DivClass random_class(Rng& rng, const SurfaceModel& s, int bound = 12) {
  std::uniform_int_distribution<int> u(-bound, bound);
  DivClass d = classes::make(s, u(rng), u(rng));
  for (auto& e : d.exc) e = u(rng);
  return d;
}

/// Tails uniform in the unit disk with pairwise separation at least `sep`.
template <class Rng>
std::vector<Complex> random_tails(Rng& rng, int n, double sep = 1e-3) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < n) {
    const Complex c(u(rng), u(rng));
    if (std::abs(c) > 1.0) continue;
    if (std::any_of(out.begin(), out.end(), [&](const Complex& o) { return std::abs(o - c) < sep; })) continue;
    out.push_back(c);
  }
  return out;
}

inline std::string str(const Integer& v) { return v.str(); }

}  // namespace detail

inline SuiteResult suite_curve_serre_duality(const VerifyOptions&) {
  SuiteResult r{"curve.serre_duality", 0, {}};
  for (int g = 2; g <= 10; ++g) {
    const auto ctx = CurveContext::with_default_points(g);
    for (long long m = -20; m <= 20; ++m) {
      r.expect(h1_mK(ctx, m) == h0_mK(ctx, 1 - m), [&] { return "h1 != h0(1-m) at g=" + std::to_string(g); });
      r.expect(h1_mK(ctx, 1 - m) == h0_mK(ctx, m), [&] { return "duality not an involution at m=" + std::to_string(m); });
      r.expect(h0_mK(ctx, m) - h1_mK(ctx, m) == Integer(m) * (2 * g - 2) - g + 1,
               [&] { return "curve Riemann-Roch fails at g=" + std::to_string(g) + " m=" + std::to_string(m); });
    }
  }
  return r;
}

inline SuiteResult suite_hitchin_base_identity(const VerifyOptions&) {
  SuiteResult r{"curve.hitchin_base_identity", 0, {}};
  for (int g = 2; g <= 16; ++g)
    for (int n = 1; n <= 16; ++n) {
      const auto ctx = CurveContext::with_default_points(g);
      Integer sum = 0;
      for (int m = 1; m <= n; ++m) sum += h0_mK(ctx, m);
      r.expect(sum == Integer(n) * n * (g - 1) + 1, [&] { return "sum h0(mK) at n=" + std::to_string(n); });
      r.expect(hitchin_base_dim(ctx, n) == hitchin_system_dims(ctx, n).dim_linear_system_sprime,
               [&] { return "base dim differs from dim |nC'_0+nKf'| at n=" + std::to_string(n); });
    }
  return r;
}

inline SuiteResult suite_pairing(const VerifyOptions& opt) {
  SuiteResult r{"lattice.pairing_symmetric_bilinear", 0, {}};
  std::mt19937_64 rng(opt.seed ^ 0x1001);
  std::uniform_int_distribution<int> coef(-5, 5), genus(2, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ctx = CurveContext::with_default_points(genus(rng));
    for (SurfaceKind k : {SurfaceKind::SPrime, SurfaceKind::S, SurfaceKind::STilde}) {
      const SurfaceModel s(k, ctx);
      const DivClass a = detail::random_class(rng, s), b = detail::random_class(rng, s), c = detail::random_class(rng, s);
      const Integer x = coef(rng), y = coef(rng);
      r.expect(intersect(s, a, b) == intersect(s, b, a), [&] { return "asymmetric pairing " + a.str() + " " + b.str(); });
      r.expect(intersect(s, x * a + y * b, c) == x * intersect(s, a, c) + y * intersect(s, b, c),
               [&] { return "pairing not linear on " + std::string(to_string(k)); });
      const DivClass kc = detail::canonical_for_suite(s, opt);
      r.expect(intersect(s, a, a - kc) % 2 == 0, [&] { return "D.(D-K) odd for " + a.str(); });
    }
  }
  return r;
}

inline SuiteResult suite_pullback_isometry(const VerifyOptions& opt) {
  SuiteResult r{"lattice.pullback_isometry", 0, {}};
  std::mt19937_64 rng(opt.seed ^ 0x2002);
  std::uniform_int_distribution<int> genus(2, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ctx = CurveContext::with_default_points(genus(rng));
    const SurfaceModel s(SurfaceKind::S, ctx), st(SurfaceKind::STilde, ctx);
    const DivClass a = detail::random_class(rng, s), b = detail::random_class(rng, s);
    r.expect(intersect(st, pullback(st, a), pullback(st, b)) == intersect(s, a, b),
             [&] { return "pullback changes " + a.str() + "." + b.str(); });
    for (std::size_t i = 0; i < st.num_exceptional(); ++i)
      r.expect(intersect(st, pullback(st, a), classes::exceptional(st, i)) == 0,
               [&] { return "pullback meets E_" + std::to_string(i + 1); });
  }
  return r;
}

inline SuiteResult suite_adjunction_families(const VerifyOptions& opt) {
  SuiteResult r{"lattice.adjunction_families", 0, {}};
  for (int g = 2; g <= 12; ++g)
    for (int n = 1; n <= 12; ++n) {
      const auto ctx = CurveContext::with_default_points(g);
      const SurfaceModel sp(SurfaceKind::SPrime, ctx), s(SurfaceKind::S, ctx), st(SurfaceKind::STilde, ctx);
      auto genus_of = [&](const SurfaceModel& m, const DivClass& d) {
        return intersect(m, d, d + detail::canonical_for_suite(m, opt)) / 2 + 1;
      };
      const Integer G1 = g - 1, N = n;
      const std::string at = " at n=" + std::to_string(n) + " g=" + std::to_string(g);
      r.expect(genus_of(s, classes::hitchin(s, n)) == (2 * N * N - N) * G1 + 1, [&] { return "genus on S" + at; });
      r.expect(genus_of(sp, classes::hitchin(sp, n)) == N * N * G1 + 1, [&] { return "genus on SPRIME" + at; });
      r.expect(genus_of(st, lnnn_class(st, n)) == N * N * G1 + 1, [&] { return "genus of L_{n,n,n}" + at; });
      r.expect(chi_structure_sheaf(s) == chi_structure_sheaf(st), [&] { return "chi(O) changes under blow-up" + at; });
    }
  return r;
}

inline SuiteResult suite_sprime_cohomology(const VerifyOptions& opt) {
  SuiteResult r{"cohomology.pushforward_vs_riemann_roch", 0, {}};
  for (int g = 2; g <= 10; ++g) {
    const auto ctx = CurveContext::with_default_points(g);
    const SurfaceModel sp(SurfaceKind::SPrime, ctx);
    for (int n1 = 1; n1 <= 8; ++n1)
      for (int n2 = 1; n2 <= 8; ++n2) {
        const DivClass d = classes::make(sp, n1, Integer(n2) * (2 * g - 2));
        const Integer chi = intersect(sp, d, d - detail::canonical_for_suite(sp, opt)) / 2 + chi_structure_sheaf(sp);
        r.expect(dims_on_sprime(ctx, n1, n2).chi() == chi, [&] {
          return "chi mismatch at g=" + std::to_string(g) + " (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
        });
      }
    for (int n = 1; n <= 16; ++n) {
      const auto dims = dims_on_sprime(ctx, n, n);
      r.expect(dims.h1 == g + 1 && dims.h2 == 0, [&] { return "h1 != g+1 at n=" + std::to_string(n); });
      r.expect(hitchin_system_dims(ctx, n).genus_spectral == adjunction_genus(sp, classes::hitchin(sp, n)),
               [&] { return "spectral genus routes disagree at n=" + std::to_string(n); });
    }
  }
  return r;
}

inline SuiteResult suite_lnnn(const VerifyOptions&) {
  SuiteResult r{"cohomology.lnnn_and_moduli", 0, {}};
  for (int g = 2; g <= 10; ++g) {
    const auto ctx = CurveContext::with_default_points(g);
    const SurfaceModel st(SurfaceKind::STilde, ctx);
    for (int n = 3; n <= 16; ++n) {
      const Integer G1 = g - 1, N = n;
      const auto amp = is_ample_generator_test(st, lnnn_vanishing_witness(st, n));
      r.expect(amp.positive && amp.self_intersection == (N * N - 5) * (2 * G1),
               [&] { return "witness not positive at n=" + std::to_string(n); });
      const auto d = dims_lnnn(ctx, n);
      r.expect(d == CohomologyDims{(N * N - 1) * G1, 0, 0}, [&] { return "h(L) wrong at n=" + std::to_string(n); });
      r.expect(moduli_dim_HT(ctx, n) == (N * N - 1) * G1 - 1, [&] { return "dim HT wrong at n=" + std::to_string(n); });
    }
    bool refused = false;
    try {
      dims_lnnn(ctx, 2);
    } catch (const RangeError&) {
      refused = true;
    }
    r.expect(refused, [&] { return "n=2 was not refused"; });
  }
  return r;
}

inline SuiteResult suite_cocycle(const VerifyOptions& opt) {
  SuiteResult r{"elm.cocycle_and_determinant", 0, {}};
  std::mt19937_64 rng(opt.seed ^ 0x3003);
  for (int trial = 0; trial < 100; ++trial) {
    ChartAtlas atlas = ChartAtlas::random(rng, 8);
    if (opt.fault == "cocycle-rule" && atlas.num_charts() >= 3)
      atlas = atlas.with_corrupted_rule(chart_transition(0, 2), Monomial::symbol(chart_transition(0, 1)));
    for (const auto& [i, j, k] : atlas.triples())
      r.expect(verify_cocycle(atlas, i, j, k).holds, [&, i = i, j = j, k = k] {
        return "cocycle fails on (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
      });
    r.expect(det_is_trivial(atlas), [] { return "determinant not trivial"; });
    for (const auto& [i, j] : atlas.overlaps())
      r.expect(is_unipotent(transition_matrix(atlas, i, j), atlas.rewrite_system({i, j})),
               [&] { return "transition not unipotent"; });
  }
  // Negative controls must be rejected.
  const ChartAtlas full = ChartAtlas::from_point_charts({true, true, true});
  const ChartAtlas broken = full.with_corrupted_rule(chart_transition(0, 2), Monomial::symbol(chart_transition(0, 1)));
  r.expect(!verify_cocycle(broken, 0, 1, 2).holds, [] { return "corrupted rule g_ik -> g_ij not detected"; });
  r.expect(!det_is_trivial(full, split_sum_transition), [] { return "O(q)+O reported with trivial determinant"; });
  return r;
}

inline SuiteResult suite_rewrite_order(const VerifyOptions& opt) {
  SuiteResult r{"elm.rewrite_order_independence", 0, {}};
  std::mt19937_64 rng(opt.seed ^ 0x4004);
  for (int trial = 0; trial < 100; ++trial) {
    const ChartAtlas atlas = ChartAtlas::random(rng, 8);
    std::vector<int> charts(atlas.num_charts());
    std::iota(charts.begin(), charts.end(), 0);
    const RewriteSystem rs = atlas.rewrite_system(charts);
    // Random expression in all chart symbols.
    std::uniform_int_distribution<int> pick(0, atlas.num_charts() - 1), ex(-2, 2), co(-3, 3);
    Expr e;
    for (int t = 0; t < 6; ++t) {
      Monomial m = Monomial::symbol(chart_coordinate(pick(rng)), ex(rng)) *
                   Monomial::symbol(chart_transition(pick(rng), pick(rng)), ex(rng));
      e += Expr::term(m, co(rng));
    }
    const Expr reference = rs.normalize(e);
    std::vector<std::string> order;
    for (const auto& rule : rs.rules()) order.push_back(rule.lhs);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      r.expect(rs.normalize_in_order(e, order) == reference, [&] { return "order-dependent normal form of " + e.str(); });
    }
    r.expect(rs.is_normal(reference), [&] { return "normal form still rewritable"; });
  }
  return r;
}

inline SuiteResult suite_tail_roundtrip(const VerifyOptions& opt) {
  SuiteResult r{"residue.leading_tails_roundtrip", 0, {}};
  std::mt19937_64 rng(opt.seed ^ 0x5005);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = deg(rng);
    const auto c = detail::random_tails(rng, n);
    const auto e = elementary_symmetric(c);
    try {
      const auto back = leading_tails(n, e, opt.tolerance);
      r.expect(multiset_distance(c, back) <= opt.tolerance, [&] { return "tails not recovered, n=" + std::to_string(n); });
    } catch (const RootFindingError& err) {
      r.expect(false, [&] { return std::string("root finder failed: ") + err.what(); });
    }
  }
  return r;
}

inline SuiteResult suite_sections(const VerifyOptions& opt) {
  SuiteResult r{"residue.split_merge_and_linearity", 0, {}};
  std::mt19937_64 rng(opt.seed ^ 0x6006);
  std::uniform_int_distribution<int> genus(2, 6), mult(1, 4), ord(-6, 3);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 200; ++trial) {
    const auto ctx = CurveContext::with_default_points(genus(rng));
    const auto support = CurvePointDivisor::canonical(ctx) + CurvePointDivisor::point("q");
    std::map<std::string, LaurentTail> tails;
    for (const auto& [p, m] : support.multiplicities())
      tails[p] = LaurentTail{p, {Complex(nd(rng), nd(rng))}};
    const ResidueSection rho(support, tails);
    const auto split = split_tail(ctx, rho);
    r.expect(merge_sections(split.over_canonical, split.over_point) == rho, [] { return "split/merge not identity"; });
    r.expect(split.over_canonical.dimension() + split.over_point.dimension() == rho.dimension() &&
                 rho.dimension() == 2 * ctx.genus() - 1,
             [] { return "degrees not additive"; });

    // Linearity of taking residue sections.
    std::map<std::string, int> dm;
    for (const auto& p : ctx.canonical_points()) dm[p] = mult(rng);
    const CurvePointDivisor d(dm);
    std::map<std::string, LaurentSeries> f, g, fg;
    for (const auto& p : ctx.canonical_points())
      for (int t = 0; t < 5; ++t) {
        const Complex a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
        const int o1 = ord(rng), o2 = ord(rng);
        f[p].push_back({o1, a});
        g[p].push_back({o2, b});
        fg[p].push_back({o1, a});
        fg[p].push_back({o2, b});
      }
    const ResidueSection lhs = residue_section_of(fg, d);
    const ResidueSection rhs = residue_section_of(f, d) + residue_section_of(g, d);
    r.expect((lhs + Complex(-1.0) * rhs).is_zero(1e-12), [] { return "residue_section_of not additive"; });
  }
  return r;
}

inline SuiteResult suite_tangency(const VerifyOptions& opt) {
  SuiteResult r{"residue.tangency_and_accounting", 0, {}};
  std::mt19937_64 rng(opt.seed ^ 0x7007);
  std::uniform_int_distribution<int> genus(2, 4), deg(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ctx = CurveContext::with_default_points(genus(rng));
    const int n = deg(rng);
    SpectralLocalData data{ctx, n, {}};
    for (const auto& p : ctx.canonical_points()) {
      const auto c = detail::random_tails(rng, n, 1e-2);
      auto lam = c;
      std::shuffle(lam.begin(), lam.end(), rng);
      data.points.push_back({p, elementary_symmetric(c), lam});
    }
    const auto rep = check_tangency(data, opt.tolerance);
    r.expect(rep.pass, [] { return "branchwise-equal lambda did not pass"; });
    auto relabeled = data;
    for (auto& p : relabeled.points) std::shuffle(p.lambda->begin(), p.lambda->end(), rng);
    r.expect(check_tangency(relabeled, opt.tolerance).pass == rep.pass, [] { return "verdict depends on branch order"; });
    auto perturbed = data;
    (*perturbed.points.back().lambda)[0] += 1.0;
    const auto bad = check_tangency(perturbed, opt.tolerance);
    r.expect(!bad.pass && !bad.residual_poles.empty() && bad.residual_poles.front().point == perturbed.points.back().id,
             [] { return "perturbed lambda not caught at the right point"; });

    const auto acc = genus_accounting(ctx, n);
    r.expect(acc.geometric_genus == hitchin_system_dims(ctx, n).genus_spectral,
             [] { return "genus accounting does not close"; });
  }
  return r;
}

inline SuiteResult suite_table_grid(const VerifyOptions& opt) {
  SuiteResult r{"tables.dual_route_grid", 0, {}};
  for (const auto& row : compute_table(opt.grid))
    for (const auto& c : row.cells)
      r.expect(c.consistent, [&] {
        return c.column + " disagrees at n=" + std::to_string(row.n) + " g=" + std::to_string(row.g) + ": " + c.display;
      });
  return r;
}

inline std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt) {
  using Suite = SuiteResult (*)(const VerifyOptions&);
  const std::pair<const char*, Suite> suites[] = {
      {"curve.serre_duality", suite_curve_serre_duality},
      {"curve.hitchin_base_identity", suite_hitchin_base_identity},
      {"lattice.pairing_symmetric_bilinear", suite_pairing},
      {"lattice.pullback_isometry", suite_pullback_isometry},
      {"lattice.adjunction_families", suite_adjunction_families},
      {"cohomology.pushforward_vs_riemann_roch", suite_sprime_cohomology},
      {"cohomology.lnnn_and_moduli", suite_lnnn},
      {"elm.cocycle_and_determinant", suite_cocycle},
      {"elm.rewrite_order_independence", suite_rewrite_order},
      {"residue.leading_tails_roundtrip", suite_tail_roundtrip},
      {"residue.split_merge_and_linearity", suite_sections},
      {"residue.tangency_and_accounting", suite_tangency},
      {"tables.dual_route_grid", suite_table_grid}};
  std::vector<SuiteResult> out;
  for (const auto& [name, suite] : suites) {
    try {
      out.push_back(suite(opt));
    } catch (const std::exception& e) {
      out.push_back(SuiteResult{name, 1, {std::string("aborted: ") + e.what()}});
    }
  }
  return out;
}

}  // namespace tangency
