#pragma once

// Numerical divisor classes on the three ruled-surface models over a curve:
//
//   SPrime  P(K + O), section C'_0 with C'_0^2 = 2 - 2g
//   S       the surface obtained by elementary transformations at the
//           canonical points, normalized section C_0 with C_0^2 = 0
//   STilde  S blown up at the 2g-2 points sigma(q_i), exceptional curves E_i
//
// A class is recorded as (c0, fdeg, exc): c0 is the coefficient of the section
// class, fdeg the total fiber degree (so nK f has fdeg = n(2g-2)), and exc[i]
// the coefficient of E_i. Everything is exact integer arithmetic.

#include "tangency/core.hpp"
#include "tangency/curve_model.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tangency {

enum class SurfaceKind { SPrime, S, STilde };

inline const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::SPrime: return "SPRIME";
    case SurfaceKind::S: return "S";
    case SurfaceKind::STilde: return "STILDE";
  }
  return "?";
}

class SurfaceModel {
 public:
  SurfaceModel(SurfaceKind kind, CurveContext ctx) : kind_(kind), ctx_(std::move(ctx)) {}

  SurfaceKind kind() const noexcept { return kind_; }
  const CurveContext& curve() const noexcept { return ctx_; }
  int genus() const noexcept { return ctx_.genus(); }

  /// Self-intersection of the distinguished section.
  Integer c0_self() const { return kind_ == SurfaceKind::SPrime ? Integer(2 - 2 * genus()) : Integer(0); }

  std::size_t num_exceptional() const {
    return kind_ == SurfaceKind::STilde ? static_cast<std::size_t>(ctx_.canonical_degree()) : 0;
  }

 private:
  SurfaceKind kind_;
  CurveContext ctx_;
};

struct DivClass {
  SurfaceKind surface = SurfaceKind::S;
  Integer c0 = 0;
  Integer fdeg = 0;
  std::vector<Integer> exc;

  DivClass& operator+=(const DivClass& o) {
    check_same(o);
    c0 += o.c0;
    fdeg += o.fdeg;
    for (std::size_t i = 0; i < exc.size(); ++i) exc[i] += o.exc[i];
    return *this;
  }
  DivClass& operator-=(const DivClass& o) { return *this += -o; }

  DivClass operator-() const {
    DivClass r = *this;
    r.c0 = -r.c0;
    r.fdeg = -r.fdeg;
    for (auto& e : r.exc) e = -e;
    return r;
  }

  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator*(const Integer& k, DivClass a) {
    a.c0 *= k;
    a.fdeg *= k;
    for (auto& e : a.exc) e *= k;
    return a;
  }

  bool operator==(const DivClass&) const = default;

  void check_same(const DivClass& o) const {
    if (surface != o.surface || exc.size() != o.exc.size())
      throw ModelMismatch(std::string("classes live on different surfaces: ") + to_string(surface) +
                          " vs " + to_string(o.surface));
  }

  std::string str() const {
    std::ostringstream os;
    os << "(" << c0 << ", " << fdeg;
    if (!exc.empty()) {
      os << ", (";
      for (std::size_t i = 0; i < exc.size(); ++i) os << (i ? "," : "") << exc[i];
      os << ")";
    }
    os << ")";
    return os.str();
  }
};

inline std::ostream& operator<<(std::ostream& os, const DivClass& d) { return os << to_string(d.surface) << d.str(); }

namespace classes {

inline DivClass zero(const SurfaceModel& s) {
  return DivClass{s.kind(), 0, 0, std::vector<Integer>(s.num_exceptional(), 0)};
}

/// a*C0 + b*f with b the total fiber degree.
inline DivClass make(const SurfaceModel& s, const Integer& c0, const Integer& fdeg) {
  DivClass d = zero(s);
  d.c0 = c0;
  d.fdeg = fdeg;
  return d;
}

/// Section class (C'_0 on SPrime, C_0 on S, bl*C_0 on STilde).
inline DivClass section(const SurfaceModel& s) { return make(s, 1, 0); }

/// Class of a single fiber.
inline DivClass fiber(const SurfaceModel& s) { return make(s, 0, 1); }

/// n K f: n copies of the fibers over the canonical divisor.
inline DivClass canonical_fibers(const SurfaceModel& s, const Integer& n) {
  return make(s, 0, n * s.curve().canonical_degree());
}

inline DivClass exceptional(const SurfaceModel& s, std::size_t i) {
  if (s.kind() != SurfaceKind::STilde) throw ModelMismatch("exceptional curves exist only on STILDE");
  if (i >= s.num_exceptional()) throw std::out_of_range("exceptional index out of range");
  DivClass d = zero(s);
  d.exc[i] = 1;
  return d;
}

/// n C0 + n K f, the class of a degree-n spectral curve (on SPrime) or its image (on S).
inline DivClass hitchin(const SurfaceModel& s, const Integer& n) {
  return make(s, n, n * s.curve().canonical_degree());
}

}  // namespace classes

inline void require_on(const SurfaceModel& s, const DivClass& d) {
  if (d.surface != s.kind() || d.exc.size() != s.num_exceptional())
    throw ModelMismatch(std::string("class on ") + to_string(d.surface) + " used on " + to_string(s.kind()));
}

/// Intersection pairing: C0^2 = c0_self, C0.f = 1, f^2 = 0, E_i.E_j = -delta_ij,
/// and E_i orthogonal to pulled-back classes.
inline Integer intersect(const SurfaceModel& s, const DivClass& a, const DivClass& b) {
  require_on(s, a);
  require_on(s, b);
  Integer r = a.c0 * b.c0 * s.c0_self() + a.c0 * b.fdeg + b.c0 * a.fdeg;
  for (std::size_t i = 0; i < a.exc.size(); ++i) r -= a.exc[i] * b.exc[i];
  return r;
}

inline DivClass canonical_class(const SurfaceModel& s) {
  const Integer kdeg = s.curve().canonical_degree();
  switch (s.kind()) {
    case SurfaceKind::SPrime: return classes::make(s, -2, 0);
    case SurfaceKind::S: return classes::make(s, -2, kdeg);
    case SurfaceKind::STilde: {
      DivClass k = classes::make(s, -2, kdeg);
      for (auto& e : k.exc) e = 1;
      return k;
    }
  }
  throw InternalError("unknown surface kind");
}

/// Arithmetic genus from adjunction: 2p_a - 2 = D.(D + K).
inline Integer adjunction_genus(const SurfaceModel& s, const DivClass& d) {
  const Integer twice = intersect(s, d, d + canonical_class(s));
  if (twice % 2 != 0) throw InternalError("D.(D+K) is odd for " + d.str());
  return twice / 2 + 1;
}

/// chi(O) = 1 + p_a = 1 - g on every model (blow-ups preserve p_a).
inline Integer chi_structure_sheaf(const SurfaceModel& s) { return Integer(1 - s.genus()); }

/// Surface Riemann-Roch: chi(O(D)) = D.(D - K)/2 + chi(O).
inline Integer riemann_roch_chi(const SurfaceModel& s, const DivClass& d) {
  const Integer twice = intersect(s, d, d - canonical_class(s));
  if (twice % 2 != 0) throw InternalError("D.(D-K) is odd for " + d.str());
  return twice / 2 + chi_structure_sheaf(s);
}

/// bl^* : Pic(S) -> Pic(STilde); exceptional coefficients are zero.
inline DivClass pullback(const SurfaceModel& stilde, const DivClass& d) {
  if (stilde.kind() != SurfaceKind::STilde) throw ModelMismatch("pullback targets STILDE");
  if (d.surface != SurfaceKind::S || !d.exc.empty()) throw ModelMismatch("pullback expects a class on S");
  DivClass r = classes::make(stilde, d.c0, d.fdeg);
  return r;
}

/// bl^*D - sum mult_i E_i.
inline DivClass strict_transform_class(const SurfaceModel& stilde, const DivClass& d,
                                       const std::vector<Integer>& mult) {
  if (mult.size() != stilde.num_exceptional())
    throw std::invalid_argument("expected " + std::to_string(stilde.num_exceptional()) +
                                " multiplicities, got " + std::to_string(mult.size()));
  DivClass r = pullback(stilde, d);
  for (std::size_t i = 0; i < mult.size(); ++i) r.exc[i] -= mult[i];
  return r;
}

/// L_{n,n,n} = bl^*(nC0 + nK f) - n sum E_i.
inline DivClass lnnn_class(const SurfaceModel& stilde, const Integer& n) {
  const SurfaceModel s(SurfaceKind::S, stilde.curve());
  return strict_transform_class(stilde, classes::hitchin(s, n), std::vector<Integer>(stilde.num_exceptional(), n));
}

/// bl^*((n+2)C0 + (n-1)K f) - (n+1) sum E_i, the auxiliary class whose
/// ampleness yields the vanishing of h^1 and h^2 for L_{n,n,n}.
inline DivClass lnnn_vanishing_witness(const SurfaceModel& stilde, const Integer& n) {
  const SurfaceModel s(SurfaceKind::S, stilde.curve());
  const DivClass base = classes::make(s, n + 2, (n - 1) * stilde.curve().canonical_degree());
  return strict_transform_class(stilde, base, std::vector<Integer>(stilde.num_exceptional(), n + 1));
}

struct AmpleReport {
  Integer self_intersection;
  Integer dot_section;
  Integer dot_fiber;
  std::vector<Integer> dot_exceptional;
  bool positive = false;
};

/// Positivity of D against the generators {bl*C0, bl*f, E_i} and D^2 > 0.
/// This is the generator test used for Nakai-Moishezon, not a full decision procedure.
inline AmpleReport is_ample_generator_test(const SurfaceModel& stilde, const DivClass& d) {
  if (stilde.kind() != SurfaceKind::STilde) throw ModelMismatch("generator test runs on STILDE");
  AmpleReport r;
  r.self_intersection = intersect(stilde, d, d);
  r.dot_section = intersect(stilde, d, classes::section(stilde));
  r.dot_fiber = intersect(stilde, d, classes::fiber(stilde));
  bool ok = r.self_intersection > 0 && r.dot_section > 0 && r.dot_fiber > 0;
  for (std::size_t i = 0; i < stilde.num_exceptional(); ++i) {
    r.dot_exceptional.push_back(intersect(stilde, d, classes::exceptional(stilde, i)));
    ok = ok && r.dot_exceptional.back() > 0;
  }
  r.positive = ok;
  return r;
}

}  // namespace tangency
