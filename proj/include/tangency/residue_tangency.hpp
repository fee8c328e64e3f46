#pragma once

// Residue sections (Laurent principal parts along a divisor), their splitting
// along K + q, branch tails of a spectral curve over the canonical points,
// singularity bookkeeping, and the tangency verdict.

#include "tangency/core.hpp"
#include "tangency/curve_model.hpp"
#include "tangency/polynomial_roots.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tangency {

/// Principal part c_m z^-m + ... + c_1 z^-1 at one point; coeffs[j-1] = c_j.
struct LaurentTail {
  std::string point;
  std::vector<Complex> coeffs;

  bool operator==(const LaurentTail&) const = default;
};

/// Local Laurent expansion as (exponent, coefficient) pairs.
using LaurentSeries = std::vector<std::pair<int, Complex>>;

/// A section of the skyscraper sheaf C_D: one tail of length m_k per point of D.
class ResidueSection {
 public:
  ResidueSection(CurvePointDivisor support, std::map<std::string, LaurentTail> tails)
      : support_(std::move(support)), tails_(std::move(tails)) {
    for (const auto& [p, m] : support_.multiplicities()) {
      auto it = tails_.find(p);
      if (it == tails_.end()) throw std::invalid_argument("no tail at support point " + p);
      if (it->second.coeffs.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("tail at " + p + " has " + std::to_string(it->second.coeffs.size()) +
                                    " coefficients, multiplicity is " + std::to_string(m));
      it->second.point = p;
    }
    for (const auto& [p, t] : tails_)
      if (support_.multiplicity(p) == 0) throw std::invalid_argument("tail at " + p + " outside the support");
  }

  static ResidueSection zero(const CurvePointDivisor& support) {
    std::map<std::string, LaurentTail> t;
    for (const auto& [p, m] : support.multiplicities()) t[p] = LaurentTail{p, std::vector<Complex>(m, 0.0)};
    return ResidueSection(support, std::move(t));
  }

  const CurvePointDivisor& support() const noexcept { return support_; }
  const std::map<std::string, LaurentTail>& tails() const noexcept { return tails_; }
  const LaurentTail& tail(const std::string& p) const { return tails_.at(p); }

  /// Number of coefficients, equal to dim H^0(C_D) = deg D.
  long long dimension() const {
    long long d = 0;
    for (const auto& [p, t] : tails_) d += static_cast<long long>(t.coeffs.size());
    return d;
  }

  bool is_zero(double tol = 0.0) const {
    for (const auto& [p, t] : tails_)
      for (const auto& c : t.coeffs)
        if (std::abs(c) > tol) return false;
    return true;
  }

  ResidueSection& operator+=(const ResidueSection& o) {
    if (!(support_ == o.support_)) throw std::invalid_argument("residue sections over different divisors");
    for (auto& [p, t] : tails_)
      for (std::size_t j = 0; j < t.coeffs.size(); ++j) t.coeffs[j] += o.tails_.at(p).coeffs[j];
    return *this;
  }
  friend ResidueSection operator+(ResidueSection a, const ResidueSection& b) { return a += b; }

  friend ResidueSection operator*(Complex s, ResidueSection a) {
    for (auto& [p, t] : a.tails_)
      for (auto& c : t.coeffs) c *= s;
    return a;
  }

  bool operator==(const ResidueSection&) const = default;

 private:
  CurvePointDivisor support_;
  std::map<std::string, LaurentTail> tails_;
};

/// Truncate each local series to its principal part of order at most m_k.
inline ResidueSection residue_section_of(const std::map<std::string, LaurentSeries>& series,
                                         const CurvePointDivisor& d) {
  std::map<std::string, LaurentTail> tails;
  for (const auto& [p, m] : d.multiplicities()) {
    auto it = series.find(p);
    if (it == series.end()) throw std::invalid_argument("no local series at support point " + p);
    LaurentTail t{p, std::vector<Complex>(m, 0.0)};
    for (const auto& [order, coeff] : it->second)
      if (order < 0 && -order <= m) t.coeffs[-order - 1] += coeff;
    tails.emplace(p, std::move(t));
  }
  return ResidueSection(d, std::move(tails));
}

struct SplitSection {
  ResidueSection over_canonical;
  ResidueSection over_point;
};

/// delta_{K+q} = delta_K + delta_q at the level of sections: separate the part
/// over the canonical points from the part over the extra point q.
inline SplitSection split_tail(const CurveContext& ctx, const ResidueSection& rho) {
  const auto& mult = rho.support().multiplicities();
  std::map<std::string, int> on_k, on_q;
  for (const auto& [p, m] : mult) {
    if (ctx.is_canonical_point(p)) {
      if (m != 1)
        throw std::invalid_argument("extra point coincides with canonical point " + p +
                                    "; only K + q with q off the canonical divisor splits");
      on_k[p] = 1;
    } else {
      on_q[p] = m;
    }
  }
  if (on_k.size() != ctx.canonical_points().size())
    throw std::invalid_argument("support does not contain the whole canonical divisor");
  if (on_q.size() != 1 || on_q.begin()->second != 1)
    throw std::invalid_argument("support must be K + q for a single reduced point q");
  std::map<std::string, LaurentTail> tk, tq;
  for (const auto& [p, t] : rho.tails()) (on_k.count(p) ? tk : tq).emplace(p, t);
  return {ResidueSection(CurvePointDivisor(on_k), std::move(tk)), ResidueSection(CurvePointDivisor(on_q), std::move(tq))};
}

/// Inverse of split_tail.
inline ResidueSection merge_sections(const ResidueSection& a, const ResidueSection& b) {
  std::map<std::string, LaurentTail> tails = a.tails();
  for (const auto& [p, t] : b.tails())
    if (!tails.emplace(p, t).second) throw std::invalid_argument("sections overlap at " + p);
  return ResidueSection(a.support() + b.support(), std::move(tails));
}

struct OrdinaryCheck {
  bool ordinary = false;        // pairwise distinct tails
  bool misses_section = false;  // all tails zero: no pole over the point
};

/// n distinct tails mean n branches through sigma(q) with distinct directions.
inline OrdinaryCheck is_ordinary_n_fold(const std::vector<Complex>& tails, double separation = 1e-8) {
  OrdinaryCheck r;
  r.misses_section = std::all_of(tails.begin(), tails.end(), [](const Complex& c) { return std::abs(c) == 0.0; });
  r.ordinary = true;
  for (std::size_t a = 0; a < tails.size(); ++a)
    for (std::size_t b = a + 1; b < tails.size(); ++b) {
      const double scale = std::max({1.0, std::abs(tails[a]), std::abs(tails[b])});
      if (std::abs(tails[a] - tails[b]) <= separation * scale) r.ordinary = false;
    }
  if (r.misses_section) r.ordinary = true;
  return r;
}

enum class PointStatus { Ordinary, NonOrdinary, MissesSection };

inline PointStatus classify(const OrdinaryCheck& c) {
  if (c.misses_section) return PointStatus::MissesSection;
  return c.ordinary ? PointStatus::Ordinary : PointStatus::NonOrdinary;
}

struct GenusAccounting {
  Integer arithmetic_genus;
  Integer delta_total;
  Integer geometric_genus;
  /// Some point lacks ordinary n-fold data: delta_total is then only a lower
  /// bound for the true delta, and geometric_genus an upper bound.
  bool partial = false;
};

/// Arithmetic genus of the image on S, total delta of the 2g-2 ordinary
/// n-fold points, and the genus of the normalization.
inline GenusAccounting genus_accounting(const CurveContext& ctx, long long n, const std::vector<PointStatus>& status) {
  if (n < 1) throw RangeError("spectral degree must be at least 1");
  if (status.size() != ctx.canonical_points().size())
    throw std::invalid_argument("need one status per canonical point");
  const Integer g1 = ctx.genus() - 1;
  GenusAccounting r;
  r.arithmetic_genus = Integer(2 * n * n - n) * g1 + 1;
  r.delta_total = Integer(ctx.canonical_degree()) * (n * (n - 1) / 2);
  r.geometric_genus = r.arithmetic_genus - r.delta_total;
  r.partial = std::any_of(status.begin(), status.end(), [](PointStatus s) { return s != PointStatus::Ordinary; });
  return r;
}

inline GenusAccounting genus_accounting(const CurveContext& ctx, long long n) {
  return genus_accounting(ctx, n, std::vector<PointStatus>(ctx.canonical_points().size(), PointStatus::Ordinary));
}

/// Leading data of a spectral curve over one canonical point.
struct PointLocalData {
  std::string id;
  std::vector<Complex> abar;                   // leading coefficients of a_1..a_n
  std::optional<std::vector<Complex>> lambda;  // tails of lambda_rho, one per branch
};

struct SpectralLocalData {
  CurveContext ctx;
  int n = 1;
  std::vector<PointLocalData> points;

  /// One record per canonical point, each of length n.
  void validate() const {
    if (n < 1) throw std::invalid_argument("degree n must be at least 1");
    if (points.size() != ctx.canonical_points().size())
      throw std::invalid_argument("expected " + std::to_string(ctx.canonical_points().size()) +
                                  " point records, got " + std::to_string(points.size()));
    std::map<std::string, int> seen;
    for (const auto& p : points) {
      if (!ctx.is_canonical_point(p.id)) throw std::invalid_argument("'" + p.id + "' is not a canonical point");
      if (seen[p.id]++) throw std::invalid_argument("point '" + p.id + "' listed twice");
      if (p.abar.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("point '" + p.id + "': abar has length " + std::to_string(p.abar.size()) +
                                    ", expected " + std::to_string(n));
      if (p.lambda && p.lambda->size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("point '" + p.id + "': lambda has length " + std::to_string(p.lambda->size()) +
                                    ", expected " + std::to_string(n));
    }
  }

  bool has_lambda() const {
    return !points.empty() && std::all_of(points.begin(), points.end(), [](const auto& p) { return p.lambda.has_value(); });
  }
};

struct BranchMismatch {
  std::string point;
  int branch;  // 1-based index into the supplied lambda tails
  Complex residue;
};

struct PointTangency {
  std::string id;
  std::vector<Complex> tails;     // c_{i,j}, sorted
  std::vector<Complex> lambda;    // as supplied
  std::vector<Complex> adjusted;  // c_{i,j} - lambda matched, indexed like `tails`
  std::vector<int> matched;       // tails[j] is paired with lambda[matched[j]]
  bool passes = false;
};

struct TangencyReport {
  /// Residue section of k over pi^{-1}(K): n tails per canonical point.
  std::vector<std::pair<std::string, std::vector<Complex>>> k_section;
  std::vector<PointTangency> points;
  std::vector<BranchMismatch> residual_poles;
  bool pass = false;
};

/// Compare rho(k + pi^* lambda_rho) with the pole pattern a tangential cover
/// must have: every adjusted tail c_{i,j} - lambda_{i,j} has to vanish, branches
/// paired by minimum-cost matching since no branch order is distinguished.
inline TangencyReport check_tangency(const SpectralLocalData& data, double tolerance = 1e-8) {
  data.validate();
  if (!data.has_lambda()) throw std::invalid_argument("tangency check needs lambda tails at every point");
  TangencyReport rep;
  for (const auto& p : data.points) {
    PointTangency pt;
    pt.id = p.id;
    pt.tails = leading_tails(data.n, p.abar, tolerance);
    pt.lambda = *p.lambda;
    pt.matched = match_multisets(pt.tails, pt.lambda);
    pt.passes = true;
    for (std::size_t j = 0; j < pt.tails.size(); ++j) {
      const Complex& lam = pt.lambda[pt.matched[j]];
      const Complex diff = pt.tails[j] - lam;
      pt.adjusted.push_back(diff);
      const double scale = std::max({1.0, std::abs(pt.tails[j]), std::abs(lam)});
      if (std::abs(diff) > tolerance * scale) {
        pt.passes = false;
        rep.residual_poles.push_back({p.id, pt.matched[j] + 1, diff});
      }
    }
    rep.k_section.emplace_back(p.id, pt.tails);
    rep.points.push_back(std::move(pt));
  }
  rep.pass = rep.residual_poles.empty();
  return rep;
}

}  // namespace tangency
