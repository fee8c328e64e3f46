#pragma once

// Complex roots from elementary symmetric data, and optimal matching of
// complex multisets.

#include "tangency/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangency {

using Complex = std::complex<double>;

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// e_1..e_n of the values, via the coefficients of prod (T + v).
inline std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values) {
  std::vector<Complex> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    for (std::size_t m = k + 1; m >= 1; --m) e[m] += values[k] * e[m - 1];
  return {e.begin() + 1, e.end()};
}

namespace detail {

using LComplex = std::complex<long double>;

// Monic polynomial T^n + p[0] T^{n-1} + ... + p[n-1].
inline LComplex horner(const std::vector<Complex>& p, LComplex x, LComplex* deriv) {
  LComplex v = 1.0L, dv = 0.0L;
  for (const auto& c : p) {
    dv = dv * x + v;
    v = v * x + LComplex(c.real(), c.imag());
  }
  if (deriv) *deriv = dv;
  return v;
}

inline double symmetric_residual(const std::vector<Complex>& roots, const std::vector<Complex>& target) {
  const auto e = elementary_symmetric(roots);
  double worst = 0.0;
  for (std::size_t m = 0; m < target.size(); ++m)
    worst = std::max(worst, std::abs(e[m] - target[m]) / std::max(1.0, std::abs(target[m])));
  return worst;
}

}  // namespace detail

/// The multiset {c_1..c_n} with e_m(c) = abar_m, i.e. the roots of
///   T^n - abar_1 T^{n-1} + abar_2 T^{n-2} - ... + (-1)^n abar_n.
///
/// Exact zero roots are split off first; the remaining roots come from the
/// companion matrix, are polished by Newton steps in extended precision, and
/// near-coincident roots are replaced by their cluster mean. The result is
/// accepted only if re-expanding reproduces abar to within `tolerance`.
/// Returned values are sorted by (real, imag).
inline std::vector<Complex> leading_tails(int n, const std::vector<Complex>& abar, double tolerance = 1e-8) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  if (abar.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected " + std::to_string(n) + " coefficients, got " + std::to_string(abar.size()));

  int degree = n;
  while (degree > 0 && abar[degree - 1] == Complex(0.0)) --degree;

  std::vector<Complex> roots(static_cast<std::size_t>(n - degree), Complex(0.0));
  if (degree > 0) {
    std::vector<Complex> p(degree);
    for (int k = 0; k < degree; ++k) p[k] = (k % 2 == 0 ? -1.0 : 1.0) * abar[k];

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int k = 0; k < degree; ++k) companion(0, k) = -p[k];
    for (int k = 1; k < degree; ++k) companion(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw RootFindingError("companion eigenvalue iteration did not converge", -1.0);

    std::vector<Complex> found(degree);
    for (int k = 0; k < degree; ++k) {
      detail::LComplex x(solver.eigenvalues()[k].real(), solver.eigenvalues()[k].imag());
      for (int it = 0; it < 8; ++it) {
        detail::LComplex d;
        const auto v = detail::horner(p, x, &d);
        if (std::abs(d) == 0.0L) break;
        const detail::LComplex next = x - v / d;
        if (std::abs(detail::horner(p, next, nullptr)) >= std::abs(v)) break;
        x = next;
      }
      found[k] = Complex(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    }

    // Multiple roots come back as a small cluster; the cluster mean is far
    // better conditioned than its members.
    double scale = 1.0;
    for (const auto& c : abar) scale = std::max(scale, std::abs(c));
    const double radius = 1e-6 * scale;
    std::vector<int> group(degree, -1);
    int groups = 0;
    for (int a = 0; a < degree; ++a) {
      if (group[a] >= 0) continue;
      group[a] = groups;
      for (int changed = 1; changed;) {
        changed = 0;
        for (int b = 0; b < degree; ++b)
          if (group[b] < 0)
            for (int c = 0; c < degree; ++c)
              if (group[c] == groups && std::abs(found[b] - found[c]) < radius) {
                group[b] = groups;
                changed = 1;
                break;
              }
      }
      ++groups;
    }
    if (groups < degree) {
      std::vector<Complex> merged = found;
      for (int gi = 0; gi < groups; ++gi) {
        Complex sum = 0.0;
        int count = 0;
        for (int k = 0; k < degree; ++k)
          if (group[k] == gi) sum += found[k], ++count;
        for (int k = 0; k < degree; ++k)
          if (group[k] == gi) merged[k] = sum / static_cast<double>(count);
      }
      std::vector<Complex> target(abar.begin(), abar.begin() + degree);
      if (detail::symmetric_residual(merged, target) <= detail::symmetric_residual(found, target)) found = merged;
    }
    roots.insert(roots.end(), found.begin(), found.end());
  }

  const double residual = detail::symmetric_residual(roots, abar);
  if (!(residual <= tolerance))
    throw RootFindingError("recovered tails do not reproduce the coefficients (residual " + std::to_string(residual) +
                               ")",
                           residual);
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

/// Minimum-cost perfect matching on a square cost matrix (Hungarian method).
/// Returns assignment[row] = column.
inline std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("cost matrix must be square");
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials; way[j] is the previous column on the augmenting path.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) minv[j] = cur, way[j] = j0;
        if (minv[j] < delta) delta = minv[j], j1 = j;
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j])
          u[match[j]] += delta, v[j] -= delta;
        else
          minv[j] -= delta;
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> assignment(n, -1);
  for (int j = 1; j <= n; ++j) assignment[match[j] - 1] = j - 1;
  return assignment;
}

/// Matching of b onto a minimizing the summed distance; result[i] indexes b.
inline std::vector<int> match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multisets differ in size");
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = std::abs(a[i] - b[j]);
  return min_cost_assignment(cost);
}

/// Largest |a_i - b_match(i)| under the optimal matching.
inline double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const auto m = match_multisets(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[m[i]]));
  return worst;
}

}  // namespace tangency
