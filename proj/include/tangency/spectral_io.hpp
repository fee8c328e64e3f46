#pragma once

// JSON input for local spectral data and the report written by `spectral`.
//
// Input schema:
//   {"genus": int, "n": int,
//    "points": [{"id": string, "abar": [[re, im], ...], "lambda": [[re, im], ...]}]}
// with exactly 2*genus-2 point records, abar of length n, lambda optional.

#include "tangency/residue_tangency.hpp"
#include "tangency/spectral_builder.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace tangency {

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Complex parse_complex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError(where + ": complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<Complex> parse_complex_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<Complex> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_complex(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

inline nlohmann::json complex_json(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }

inline nlohmann::json complex_list_json(const std::vector<Complex>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : v) out.push_back(complex_json(c));
  return out;
}

inline const char* status_name(PointStatus s) {
  switch (s) {
    case PointStatus::Ordinary: return "ordinary";
    case PointStatus::NonOrdinary: return "non-ordinary";
    case PointStatus::MissesSection: return "misses";
  }
  return "?";
}

}  // namespace detail

inline SpectralLocalData parse_spectral_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("top level must be an object");
  for (const char* key : {"genus", "n", "points"})
    if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  if (!j["genus"].is_number_integer()) throw SchemaError("'genus' must be an integer");
  if (!j["n"].is_number_integer()) throw SchemaError("'n' must be an integer");
  if (!j["points"].is_array()) throw SchemaError("'points' must be an array");
  const long long genus = j["genus"].get<long long>();
  const long long n = j["n"].get<long long>();
  if (genus < 2 || genus > 64) throw SchemaError("'genus' must lie in [2, 64]");
  if (n < 1 || n > 16) throw SchemaError("'n' must lie in [1, 16]");

  std::vector<std::string> ids;
  std::vector<PointLocalData> points;
  for (std::size_t k = 0; k < j["points"].size(); ++k) {
    const auto& p = j["points"][k];
    const std::string where = "points[" + std::to_string(k) + "]";
    if (!p.is_object() || !p.contains("id") || !p["id"].is_string() || !p.contains("abar"))
      throw SchemaError(where + ": needs string 'id' and 'abar'");
    PointLocalData d;
    d.id = p["id"].get<std::string>();
    d.abar = detail::parse_complex_list(p["abar"], where + ".abar");
    if (p.contains("lambda")) d.lambda = detail::parse_complex_list(p["lambda"], where + ".lambda");
    ids.push_back(d.id);
    points.push_back(std::move(d));
  }
  try {
    SpectralLocalData data{CurveContext(static_cast<int>(genus), ids), static_cast<int>(n), std::move(points)};
    data.validate();
    return data;
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(e.what());
  }
}

inline SpectralLocalData parse_spectral_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return parse_spectral_json(j);
}

inline nlohmann::json spectral_input_json(const SpectralLocalData& data) {
  nlohmann::json j;
  j["genus"] = data.ctx.genus();
  j["n"] = data.n;
  j["points"] = nlohmann::json::array();
  for (const auto& p : data.points) {
    nlohmann::json pj;
    pj["id"] = p.id;
    pj["abar"] = detail::complex_list_json(p.abar);
    if (p.lambda) pj["lambda"] = detail::complex_list_json(*p.lambda);
    j["points"].push_back(std::move(pj));
  }
  return j;
}

inline nlohmann::ordered_json spectral_report_json(const SpectralDescriptor& d) {
  nlohmann::ordered_json j;
  j["class_sprime"] = d.class_sprime.str();
  j["class_s"] = d.class_s.str();
  j["class_stilde"] = d.class_stilde.str();
  j["genera"] = {{"sprime", to_int64(d.genera.on_sprime)},
                 {"s", to_int64(d.genera.on_s)},
                 {"stilde", to_int64(d.genera.on_stilde)}};
  j["accounting"] = {{"arithmetic_genus", to_int64(d.accounting.arithmetic_genus)},
                     {"delta_total", to_int64(d.accounting.delta_total)},
                     {"geometric_genus", to_int64(d.accounting.geometric_genus)},
                     {"geometric_genus_is_upper_bound", d.accounting.partial}};
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : d.points) {
    nlohmann::ordered_json pj;
    pj["id"] = p.id;
    pj["tails"] = detail::complex_list_json(p.tails);
    pj["status"] = detail::status_name(p.status);
    if (p.status == PointStatus::MissesSection) pj["note"] = "branch misses C0 over point";
    j["points"].push_back(std::move(pj));
  }
  if (d.tangency) {
    nlohmann::ordered_json t;
    t["verdict"] = d.tangency->pass ? "PASS" : "FAIL";
    t["residual_poles"] = nlohmann::ordered_json::array();
    for (const auto& m : d.tangency->residual_poles)
      t["residual_poles"].push_back({{"point", m.point}, {"branch", m.branch}, {"residue", detail::complex_json(m.residue)}});
    t["adjusted"] = nlohmann::ordered_json::object();
    for (const auto& p : d.tangency->points) t["adjusted"][p.id] = detail::complex_list_json(p.adjusted);
    j["tangency"] = std::move(t);
  }
  return j;
}

inline std::string format_complex(const Complex& c) {
  std::ostringstream os;
  os.precision(12);
  os << c.real();
  if (c.imag() != 0.0) os << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  return os.str();
}

inline std::string spectral_report_text(const SpectralDescriptor& d) {
  std::ostringstream os;
  os << "classes: SPRIME" << d.class_sprime.str() << "  S" << d.class_s.str() << "  STILDE" << d.class_stilde.str()
     << "\n";
  os << "genera (SPRIME, S, STILDE): " << d.genera.on_sprime << ", " << d.genera.on_s << ", " << d.genera.on_stilde
     << "\n";
  os << "accounting (arithmetic, delta, geometric): " << d.accounting.arithmetic_genus << ", "
     << d.accounting.delta_total << ", " << (d.accounting.partial ? "<= " : "") << d.accounting.geometric_genus << "\n";
  for (const auto& p : d.points) {
    os << "point " << p.id << ": tails {";
    for (std::size_t k = 0; k < p.tails.size(); ++k) os << (k ? ", " : "") << format_complex(p.tails[k]);
    os << "} " << detail::status_name(p.status);
    if (p.status == PointStatus::MissesSection) os << " (branch misses C0 over point " << p.id << ")";
    os << "\n";
  }
  if (d.tangency) {
    os << "tangency: " << (d.tangency->pass ? "PASS" : "FAIL") << "\n";
    for (const auto& m : d.tangency->residual_poles)
      os << "  residual pole at point " << m.point << " branch " << m.branch << ": " << format_complex(m.residue)
         << "\n";
  }
  return os.str();
}

}  // namespace tangency
