#pragma once

// Formula tables over an (n, g) grid. Every cell is computed by two
// independent routes; a disagreement is rendered as an error marker.

#include "tangency/cohomology_engine.hpp"
#include "tangency/curve_model.hpp"
#include "tangency/elm_engine.hpp"
#include "tangency/picard_lattice.hpp"
#include "tangency/residue_tangency.hpp"
#include "tangency/spectral_builder.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tangency {

inline const std::string kNotApplicable = "n/a: n≤2";

struct TableCell {
  std::string column;
  std::optional<Integer> value;  // set when both routes agree on a number
  std::string display;
  bool consistent = true;
};

struct TableRow {
  int n;
  int g;
  std::vector<TableCell> cells;

  const TableCell& cell(const std::string& column) const {
    for (const auto& c : cells)
      if (c.column == column) return c;
    throw std::out_of_range("no column " + column);
  }
};

inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols{"genus_SPRIME", "genus_S", "dim_SPRIME", "h1", "h2", "dim_L", "dim_HT"};
  return cols;
}

namespace detail {

using Route = std::function<std::optional<Integer>()>;

// A route returning nullopt means "not defined here" (n <= 2 for L_{n,n,n}).
inline TableCell dual_route(const std::string& column, const Route& first, const Route& second) {
  TableCell c{column, std::nullopt, "", true};
  std::optional<Integer> a, b;
  std::string err_a, err_b;
  try {
    a = first();
  } catch (const std::exception& e) {
    err_a = e.what();
  }
  try {
    b = second();
  } catch (const std::exception& e) {
    err_b = e.what();
  }
  if (err_a.empty() && err_b.empty() && a == b) {
    c.value = a;
    c.display = a ? a->str() : kNotApplicable;
    return c;
  }
  c.consistent = false;
  auto show = [](const std::optional<Integer>& v, const std::string& err) {
    if (!err.empty()) return std::string("error");
    return v ? v->str() : std::string("n/a");
  };
  c.display = "ERR(" + show(a, err_a) + "|" + show(b, err_b) + ")";
  return c;
}

}  // namespace detail

inline TableRow compute_row(int n, int g) {
  const CurveContext ctx = CurveContext::with_default_points(g);
  const SurfaceModel sprime(SurfaceKind::SPrime, ctx), s(SurfaceKind::S, ctx), stilde(SurfaceKind::STilde, ctx);
  const Integer N = n, G1 = g - 1;
  TableRow row{n, g, {}};

  row.cells.push_back(detail::dual_route(
      "genus_SPRIME", [&] { return std::optional<Integer>(N * N * G1 + 1); },
      [&] { return std::optional<Integer>(adjunction_genus(sprime, class_in_sprime(ctx, n))); }));

  row.cells.push_back(detail::dual_route(
      "genus_S", [&] { return std::optional<Integer>((2 * N * N - N) * G1 + 1); },
      [&] { return std::optional<Integer>(adjunction_genus(s, elm_divisor_transport(class_in_sprime(ctx, n)))); }));

  // Pushforward sum versus surface Riemann-Roch corrected by h1 = g + 1.
  row.cells.push_back(detail::dual_route(
      "dim_SPRIME", [&] { return std::optional<Integer>(dims_on_sprime(ctx, n, n).h0 - 1); },
      [&] { return std::optional<Integer>(riemann_roch_chi(sprime, class_in_sprime(ctx, n)) + (g + 1) - 1); }));

  row.cells.push_back(detail::dual_route(
      "h1", [&] { return std::optional<Integer>(dims_on_sprime(ctx, n, n).h1); },
      [&] { return std::optional<Integer>(Integer(g + 1)); }));

  // h2(D) = h0(K - D) by Serre duality; K - D meets a fiber negatively, and
  // fibers move, so it has no sections.
  row.cells.push_back(detail::dual_route(
      "h2", [&] { return std::optional<Integer>(dims_on_sprime(ctx, n, n).h2); },
      [&] {
        const DivClass rest = canonical_class(sprime) - class_in_sprime(ctx, n);
        if (intersect(sprime, rest, classes::fiber(sprime)) >= 0)
          throw InternalError("K - D is not negative on fibers");
        return std::optional<Integer>(Integer(0));
      }));

  row.cells.push_back(detail::dual_route(
      "dim_L",
      [&]() -> std::optional<Integer> {
        if (n <= 2) return std::nullopt;
        return dims_lnnn(ctx, n).h0 - 1;
      },
      [&]() -> std::optional<Integer> {
        if (n <= 2) return std::nullopt;
        // L.K = 0 on STilde, so h0(L) = p_a(L) - g and dim |L| = p_a(L) - g - 1.
        return genus_accounting(ctx, n).geometric_genus - (g + 1);
      }));

  row.cells.push_back(detail::dual_route(
      "dim_HT",
      [&]() -> std::optional<Integer> {
        if (n <= 2) return std::nullopt;
        return moduli_dim_HT(ctx, n);
      },
      [&]() -> std::optional<Integer> {
        if (n <= 2) return std::nullopt;
        return (N * N - 1) * G1 - 1;
      }));
  return row;
}

struct GridConfig {
  int genus_min = 2, genus_max = 6;
  int n_min = 1, n_max = 6;

  /// Ranges within 2 <= g <= 64 and 1 <= n <= 16, nonempty.
  void validate() const {
    if (genus_min < 2 || genus_max > 64) throw std::invalid_argument("genus range must lie within [2, 64]");
    if (n_min < 1 || n_max > 16) throw std::invalid_argument("degree range must lie within [1, 16]");
    if (genus_min > genus_max || n_min > n_max) throw std::invalid_argument("empty grid");
  }
};

inline std::vector<TableRow> compute_table(const GridConfig& cfg) {
  cfg.validate();
  std::vector<TableRow> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n)
    for (int g = cfg.genus_min; g <= cfg.genus_max; ++g) rows.push_back(compute_row(n, g));
  return rows;
}

inline bool table_consistent(const std::vector<TableRow>& rows) {
  for (const auto& r : rows)
    for (const auto& c : r.cells)
      if (!c.consistent) return false;
  return true;
}

inline std::string format_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,g";
  for (const auto& c : table_columns()) os << "," << c;
  os << "\n";
  for (const auto& r : rows) {
    os << r.n << "," << r.g;
    for (const auto& c : r.cells) os << "," << c.display;
    os << "\n";
  }
  return os.str();
}

inline std::string format_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| n | g |";
  for (const auto& c : table_columns()) os << " " << c << " |";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < table_columns().size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "| " << r.n << " | " << r.g << " |";
    for (const auto& c : r.cells) os << " " << c.display << " |";
    os << "\n";
  }
  return os.str();
}

inline nlohmann::ordered_json table_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json out;
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["g"] = r.g;
    for (const auto& c : r.cells) {
      if (c.value)
        row[c.column] = to_int64(*c.value);
      else
        row[c.column] = c.display;
    }
    out["rows"].push_back(std::move(row));
  }
  return out;
}

inline std::string format_json(const std::vector<TableRow>& rows) { return table_json(rows).dump(2) + "\n"; }

}  // namespace tangency
