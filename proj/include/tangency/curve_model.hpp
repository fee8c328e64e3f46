#pragma once

// Base curve of genus g >= 2 with a reduced canonical divisor, and the
// cohomology dimensions of its pluricanonical bundles.

#include "tangency/core.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tangency {

/// Genus-g curve carrying 2g-2 distinct, labeled canonical points q_1..q_{2g-2}.
///
/// Points are opaque identifiers; no coordinates are attached. All curve-level
/// computations reduce to dimension arithmetic.
class CurveContext {
 public:
  CurveContext(int genus, std::vector<std::string> canonical_points)
      : genus_(genus), points_(std::move(canonical_points)) {
    if (genus_ < 2)
      throw RangeError("curve genus must be at least 2, got " + std::to_string(genus_));
    if (points_.size() != static_cast<std::size_t>(2 * genus_ - 2))
      throw std::invalid_argument("expected " + std::to_string(2 * genus_ - 2) +
                                  " canonical points, got " + std::to_string(points_.size()));
    std::set<std::string> seen;
    for (const auto& p : points_) {
      if (p.empty()) throw std::invalid_argument("empty canonical point identifier");
      if (!seen.insert(p).second)
        throw std::invalid_argument("canonical point '" + p + "' listed twice");
    }
  }

  /// Context whose canonical points are named q1, q2, ..., q{2g-2}.
  static CurveContext with_default_points(int genus) {
    if (genus < 2)
      throw RangeError("curve genus must be at least 2, got " + std::to_string(genus));
    std::vector<std::string> pts;
    for (int i = 1; i <= 2 * genus - 2; ++i) pts.push_back("q" + std::to_string(i));
    return CurveContext(genus, std::move(pts));
  }

  int genus() const noexcept { return genus_; }
  int canonical_degree() const noexcept { return 2 * genus_ - 2; }
  const std::vector<std::string>& canonical_points() const noexcept { return points_; }

  bool is_canonical_point(const std::string& id) const {
    for (const auto& p : points_)
      if (p == id) return true;
    return false;
  }

 private:
  int genus_;
  std::vector<std::string> points_;
};

/// Effective divisor sum m_k p_k on the curve, all m_k >= 1.
class CurvePointDivisor {
 public:
  CurvePointDivisor() = default;
  explicit CurvePointDivisor(std::map<std::string, int> multiplicities)
      : mult_(std::move(multiplicities)) {
    for (const auto& [p, m] : mult_)
      if (m < 1)
        throw std::invalid_argument("multiplicity at '" + p + "' must be positive");
    if (mult_.empty()) throw std::invalid_argument("divisor must have degree at least 1");
  }

  /// K = q_1 + ... + q_{2g-2}.
  static CurvePointDivisor canonical(const CurveContext& ctx) {
    std::map<std::string, int> m;
    for (const auto& p : ctx.canonical_points()) m[p] = 1;
    return CurvePointDivisor(std::move(m));
  }

  static CurvePointDivisor point(const std::string& id, int multiplicity = 1) {
    return CurvePointDivisor({{id, multiplicity}});
  }

  CurvePointDivisor operator+(const CurvePointDivisor& other) const {
    auto m = mult_;
    for (const auto& [p, k] : other.mult_) m[p] += k;
    return CurvePointDivisor(std::move(m));
  }

  const std::map<std::string, int>& multiplicities() const noexcept { return mult_; }

  int multiplicity(const std::string& id) const {
    auto it = mult_.find(id);
    return it == mult_.end() ? 0 : it->second;
  }

  long long degree() const {
    long long d = 0;
    for (const auto& [p, m] : mult_) d += m;
    return d;
  }

  bool operator==(const CurvePointDivisor&) const = default;

 private:
  std::map<std::string, int> mult_;
};

/// dim H^0(O(mK)): 0 for m<0, 1 for m=0, g for m=1, (2m-1)(g-1) for m>=2.
inline Integer h0_mK(const CurveContext& ctx, long long m) {
  const Integer g = ctx.genus();
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (m == 1) return g;
  return Integer(2 * m - 1) * (g - 1);
}

/// dim H^1(O(mK)) = h0((1-m)K) by Serre duality.
inline Integer h1_mK(const CurveContext& ctx, long long m) { return h0_mK(ctx, 1 - m); }

/// dim H^0(C_D) = deg D.
inline long long skyscraper_dim(const CurvePointDivisor& d) { return d.degree(); }

}  // namespace tangency
