#pragma once

// Transition matrices of the ruled surface obtained from P^1 x R by the pair
// of elementary transformations at ([1,0], q) and ([-1,1], q), handled in the
// Laurent algebra of chart symbols z_i and line-bundle transitions g_ij.
//
// Chart algebra: g_ij = z_j / z_i, so the rewrite rules are
//   z_j -> g_ij z_i,  g_ik -> g_ij g_jk,  g_ii -> 1,  g_ji -> g_ij^-1,
// oriented along increasing chart index, plus g_ij -> 1 on overlaps that do
// not meet the modified points.

#include "tangency/core.hpp"
#include "tangency/laurent.hpp"
#include "tangency/picard_lattice.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tangency {

inline std::string chart_coordinate(int i) { return "z_" + std::to_string(i); }
inline std::string chart_transition(int i, int j) { return "g_" + std::to_string(i) + "_" + std::to_string(j); }

/// 2x2 matrix over the Laurent algebra, read projectively.
struct ProjTransition {
  Expr a = 1, b = 0, c = 0, d = 1;

  static ProjTransition identity() { return {}; }

  friend ProjTransition operator*(const ProjTransition& x, const ProjTransition& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  Expr det() const { return a * d - b * c; }

  std::array<const Expr*, 4> entries() const { return {&a, &b, &c, &d}; }

  ProjTransition map(const std::function<Expr(const Expr&)>& f) const { return {f(a), f(b), f(c), f(d)}; }

  /// Rescale so the (0,0) entry is 1, when that entry is a unit.
  ProjTransition normalized() const {
    if (!a.is_unit()) return *this;
    const Expr s = a.unit_inverse();
    return map([&](const Expr& e) { return e * s; });
  }

  bool operator==(const ProjTransition&) const = default;
};

/// Dump block: a header line then one row per line, entries tab separated.
inline std::string dump_matrix(const std::string& title, const ProjTransition& m) {
  std::ostringstream os;
  os << "# " << title << "\n" << m.a << "\t" << m.b << "\n" << m.c << "\t" << m.d << "\n";
  return os.str();
}

/// Projective equality in the quotient by `rules`: all 2x2 minors of the
/// pair of entry vectors vanish, and neither matrix is zero.
inline bool projectively_equal(const ProjTransition& x, const ProjTransition& y, const RewriteSystem& rules) {
  const auto ex = x.entries();
  const auto ey = y.entries();
  bool x_zero = true, y_zero = true;
  for (int p = 0; p < 4; ++p) {
    x_zero = x_zero && rules.normalize(*ex[p]).is_zero();
    y_zero = y_zero && rules.normalize(*ey[p]).is_zero();
  }
  if (x_zero || y_zero) return false;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      if (rules.normalize(*ex[p] * *ey[q]) != rules.normalize(*ex[q] * *ey[p])) return false;
  return true;
}

enum class LocalFactorKind { PPrime, P, Combined };

/// Local defining transformation of the elementary transformation(s) at a point,
/// in the coordinate `z` centered there. Away from the point it is the identity.
inline ProjTransition local_factor(LocalFactorKind kind, const std::string& z = "z", bool at_point = true) {
  if (!at_point) return ProjTransition::identity();
  const Expr inv = Expr::symbol(z, -1);
  switch (kind) {
    case LocalFactorKind::PPrime: return {inv, 0, 0, 1};
    case LocalFactorKind::P: return {1, 1, 0, inv};
    case LocalFactorKind::Combined: return {inv, 1, 0, inv};
  }
  throw InternalError("unknown local factor");
}

/// Open cover of the curve with a per-overlap flag telling whether the line
/// bundle transition g_ij is nontrivial there.
///
/// Overlaps flagged false force g_ij = 1; the induced equivalence on charts
/// must not identify the two ends of an overlap flagged true.
class ChartAtlas {
 public:
  struct Overlap {
    int i;
    int j;
    bool contains_point;
  };

  ChartAtlas(int num_charts, const std::vector<Overlap>& overlaps) : n_(num_charts), parent_(num_charts) {
    if (num_charts < 1) throw std::invalid_argument("atlas needs at least one chart");
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& o : overlaps) {
      if (o.i == o.j || o.i < 0 || o.j < 0 || o.i >= n_ || o.j >= n_)
        throw std::invalid_argument("bad overlap (" + std::to_string(o.i) + "," + std::to_string(o.j) + ")");
      const auto key = std::minmax(o.i, o.j);
      if (!flags_.emplace(key, o.contains_point).second)
        throw std::invalid_argument("overlap (" + std::to_string(o.i) + "," + std::to_string(o.j) + ") listed twice");
      if (!o.contains_point) unite(o.i, o.j);
    }
    for (const auto& [key, flag] : flags_)
      if (flag && find(key.first) == find(key.second))
        throw std::invalid_argument("overlap (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                    ") is flagged nontrivial but trivial overlaps force g = 1 there");
  }

  /// Cover in which each chart either carries one of the modified points (in
  /// its coordinate) or misses all of them; every pair of charts overlaps, and
  /// an overlap is nontrivial exactly when one of its charts carries a point.
  static ChartAtlas from_point_charts(const std::vector<bool>& carries_point) {
    std::vector<Overlap> ov;
    const int n = static_cast<int>(carries_point.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ov.push_back({i, j, carries_point[i] || carries_point[j]});
    return ChartAtlas(n, ov);
  }

  /// Random atlas of the above form with 3..max_charts charts.
  template <class Rng>
  static ChartAtlas random(Rng& rng, int max_charts = 8) {
    std::uniform_int_distribution<int> size(3, std::max(3, max_charts));
    std::bernoulli_distribution carry(0.6);
    std::vector<bool> flags(size(rng));
    for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = carry(rng);
    return from_point_charts(flags);
  }

  int num_charts() const noexcept { return n_; }

  bool has_overlap(int i, int j) const { return flags_.count(std::minmax(i, j)) != 0; }

  bool overlap_contains_point(int i, int j) const {
    auto it = flags_.find(std::minmax(i, j));
    if (it == flags_.end())
      throw std::invalid_argument("charts " + std::to_string(i) + " and " + std::to_string(j) + " do not overlap");
    return it->second;
  }

  std::vector<std::pair<int, int>> overlaps() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, flag] : flags_) out.push_back(key);
    return out;
  }

  /// All triples i<j<k with the three pairwise overlaps present.
  std::vector<std::array<int, 3>> triples() const {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k)
          if (has_overlap(i, j) && has_overlap(j, k) && has_overlap(i, k)) out.push_back({i, j, k});
    return out;
  }

  /// Copy of this atlas whose rewrite systems use `lhs -> rhs` in place of the
  /// generated rule. Fault injection for negative controls.
  ChartAtlas with_corrupted_rule(const std::string& lhs, const Monomial& rhs) const {
    ChartAtlas copy = *this;
    copy.overrides_.emplace_back(lhs, rhs);
    return copy;
  }

  /// Rewrite system on the chart symbols of `charts`. The basis is z_r for the
  /// smallest chart r, and g between consecutive representatives of the
  /// g = 1 classes met in increasing chart order.
  RewriteSystem rewrite_system(std::vector<int> charts) const {
    std::sort(charts.begin(), charts.end());
    charts.erase(std::unique(charts.begin(), charts.end()), charts.end());
    if (charts.empty()) return {};
    for (int c : charts)
      if (c < 0 || c >= n_) throw std::invalid_argument("no chart " + std::to_string(c));

    std::vector<int> reps;           // first chart of each class, in order
    std::map<int, std::size_t> slot;  // chart -> index into reps
    for (int c : charts) {
      const int root = find(c);
      auto it = std::find_if(reps.begin(), reps.end(), [&](int r) { return find(r) == root; });
      if (it == reps.end()) {
        slot[c] = reps.size();
        reps.push_back(c);
      } else {
        slot[c] = static_cast<std::size_t>(it - reps.begin());
      }
    }
    auto chain = [&](int a, int b) {
      std::size_t s = slot.at(a), t = slot.at(b);
      Monomial m;
      const bool flip = s > t;
      if (flip) std::swap(s, t);
      for (std::size_t u = s; u < t; ++u) m *= Monomial::symbol(chart_transition(reps[u], reps[u + 1]));
      return flip ? m.inverse() : m;
    };

    RewriteSystem rs;
    for (int a : charts) {
      rs.add_rule(chart_transition(a, a), Monomial{});
      for (int b : charts) {
        if (a == b) continue;
        const bool basis = a < b && slot.at(b) == slot.at(a) + 1 && reps[slot.at(a)] == a && reps[slot.at(b)] == b;
        if (!basis) rs.add_rule(chart_transition(a, b), chain(a, b));
      }
    }
    const int r = charts.front();
    for (int c : charts)
      if (c != r)
        rs.add_rule(chart_coordinate(c), Monomial::symbol(chart_transition(r, c)) * Monomial::symbol(chart_coordinate(r)));
    for (const auto& [lhs, rhs] : overrides_)
      if (rs.has_rule(lhs)) rs.replace_rule(lhs, rhs);
    return rs;
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  int n_;
  std::vector<int> parent_;
  std::map<std::pair<int, int>, bool> flags_;
  std::vector<std::pair<std::string, Monomial>> overrides_;
};

/// G_ij = [[1, (g_ij - 1) z_i], [0, 1]], or the identity where g_ij = 1.
inline ProjTransition transition_matrix(const ChartAtlas& atlas, int i, int j) {
  if (!atlas.overlap_contains_point(i, j)) return ProjTransition::identity();
  const Expr g = Expr::symbol(chart_transition(i, j));
  return {1, (g - 1) * Expr::symbol(chart_coordinate(i)), 0, 1};
}

/// F(z_j) * z_i^2 F(z_i)^-1 with F the combined local factor: the transition
/// before the projective rescaling and the substitution z_j = g_ij z_i.
inline ProjTransition raw_transition_product(int i, int j) {
  const std::string zi = chart_coordinate(i);
  const Expr z = Expr::symbol(zi);
  const ProjTransition inverse_scaled{z, -(z * z), 0, z};
  return local_factor(LocalFactorKind::Combined, chart_coordinate(j)) * inverse_scaled;
}

struct CocycleCheck {
  bool holds = false;
  std::vector<std::string> trace;
};

/// G_ij G_jk == G_ik projectively, modulo the chart rewrite rules.
inline CocycleCheck verify_cocycle(const ChartAtlas& atlas, int i, int j, int k) {
  CocycleCheck out;
  const RewriteSystem rules = atlas.rewrite_system({i, j, k});
  const ProjTransition lhs = transition_matrix(atlas, i, j) * transition_matrix(atlas, j, k);
  const ProjTransition rhs = transition_matrix(atlas, i, k);
  out.trace.push_back(dump_matrix("G(" + std::to_string(i) + "," + std::to_string(j) + ")*G(" + std::to_string(j) +
                                      "," + std::to_string(k) + ")",
                                  lhs));
  Expr lhs_b = rules.normalize_traced(lhs.b, out.trace);
  out.trace.push_back("product entry: " + lhs.b.str() + " = " + lhs_b.str());
  Expr rhs_b = rules.normalize_traced(rhs.b, out.trace);
  out.trace.push_back("G(" + std::to_string(i) + "," + std::to_string(k) + ") entry: " + rhs.b.str() + " = " +
                      rhs_b.str());
  out.holds = projectively_equal(lhs, rhs, rules);
  out.trace.push_back(out.holds ? "cocycle holds" : "cocycle FAILS");
  return out;
}

using TransitionFamily = std::function<ProjTransition(const ChartAtlas&, int, int)>;

/// det of every normalized transition matrix of the family rewrites to 1.
inline bool det_is_trivial(const ChartAtlas& atlas, const TransitionFamily& family = transition_matrix) {
  for (const auto& [i, j] : atlas.overlaps()) {
    const RewriteSystem rules = atlas.rewrite_system({i, j});
    for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      const ProjTransition m = family(atlas, a, b).normalized();
      if (rules.normalize(m.det()) != Expr(1)) return false;
    }
  }
  return true;
}

/// Transitions of O(q) + O, diag(g_ij, 1); not of determinant one.
inline ProjTransition split_sum_transition(const ChartAtlas& atlas, int i, int j) {
  if (!atlas.overlap_contains_point(i, j)) return ProjTransition::identity();
  return {Expr::symbol(chart_transition(i, j)), 0, 0, 1};
}

/// Upper-triangular with both diagonal entries 1 after normalization.
inline bool is_unipotent(const ProjTransition& m, const RewriteSystem& rules) {
  const ProjTransition n = m.normalized().map([&](const Expr& e) { return rules.normalize(e); });
  return n.c.is_zero() && n.a == Expr(1) && n.d == Expr(1);
}

/// a C'_0 + b f' on SPrime  |->  a C_0 + b f on S.
inline DivClass elm_divisor_transport(const DivClass& d) {
  if (d.surface != SurfaceKind::SPrime || !d.exc.empty()) throw ModelMismatch("elm transport expects a class on SPRIME");
  return DivClass{SurfaceKind::S, d.c0, d.fdeg, {}};
}

}  // namespace tangency
