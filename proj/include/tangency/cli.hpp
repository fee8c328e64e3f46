#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification or tangency
// failure, 2 input or configuration error. Reports go to `out`, diagnostics
// to `err`.

#include "tangency/cohomology_engine.hpp"
#include "tangency/elm_engine.hpp"
#include "tangency/picard_lattice.hpp"
#include "tangency/spectral_builder.hpp"
#include "tangency/spectral_io.hpp"
#include "tangency/tables.hpp"
#include "tangency/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tangency::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kConfigError = 2 };

enum class Format { Json, Csv, Markdown };

struct RunConfig {
  std::string command;
  GridConfig grid;
  Format format = Format::Markdown;
  double tolerance = 1e-8;
  std::uint64_t seed = 20240229;
  bool strict = false;
  std::string input;
  std::string fault;
  int charts = 4;

  void validate() const {
    grid.validate();
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (charts < 3 || charts > 8) throw std::invalid_argument("--charts must lie in [3, 8]");
    if (!fault.empty() && fault != "canonical-class" && fault != "cocycle-rule")
      throw std::invalid_argument("unknown fault '" + fault + "'");
  }
};

inline int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  const auto rows = compute_table(cfg.grid);
  switch (cfg.format) {
    case Format::Json: out << format_json(rows); break;
    case Format::Csv: out << format_csv(rows); break;
    case Format::Markdown: out << format_markdown(rows); break;
  }
  return table_consistent(rows) ? kSuccess : kFailure;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.tolerance = cfg.tolerance;
  opt.grid = cfg.grid;
  opt.fault = cfg.fault;
  const auto results = run_all_suites(opt);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (cfg.format == Format::Json) {
    nlohmann::ordered_json j;
    j["seed"] = cfg.seed;
    j["passed"] = ok;
    j["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
      j["suites"].push_back({{"name", r.name}, {"checks", r.checks}, {"passed", r.passed()}, {"failures", r.failures}});
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
      for (const auto& f : r.failures) out << "  - " << f << "\n";
    }
    out << (ok ? "all invariant suites passed" : "invariant suites FAILED") << " (seed " << cfg.seed << ")\n";
  }
  return ok ? kSuccess : kFailure;
}

inline int cmd_elm(const RunConfig& cfg, std::ostream& out) {
  out << dump_matrix("local factor P' at q", local_factor(LocalFactorKind::PPrime));
  out << dump_matrix("local factor P at q", local_factor(LocalFactorKind::P));
  out << dump_matrix("local factor P*P' at q", local_factor(LocalFactorKind::Combined));
  out << "\n";

  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution carry(0.6);
  std::vector<bool> flags(cfg.charts);
  for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = i < 2 || carry(rng);
  const ChartAtlas atlas = ChartAtlas::from_point_charts(flags);
  out << "atlas: " << atlas.num_charts() << " charts, carrying the point:";
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out << " " << i;
  out << "\n\n";

  const RewriteSystem pair_rules = atlas.rewrite_system({0, 1});
  const ProjTransition raw = raw_transition_product(0, 1);
  out << dump_matrix("raw product F(z_1) * z_0^2 F(z_0)^-1", raw);
  out << dump_matrix("normalized under chart rules", raw.normalized().map([&](const Expr& e) {
    return pair_rules.normalize(e);
  }));
  out << "\n";

  for (const auto& [i, j] : atlas.overlaps())
    out << dump_matrix("G(" + std::to_string(i) + "," + std::to_string(j) + ")", transition_matrix(atlas, i, j));
  out << "\n";

  bool ok = true;
  for (const auto& [i, j, k] : atlas.triples()) {
    const auto check = verify_cocycle(atlas, i, j, k);
    ok = ok && check.holds;
    out << "## cocycle (" << i << "," << j << "," << k << ")\n";
    for (const auto& line : check.trace) out << line << (line.empty() || line.back() == '\n' ? "" : "\n");
  }
  const bool det = det_is_trivial(atlas);
  out << "\ndeterminant trivial: " << (det ? "yes" : "no") << "\n";
  return ok && det ? kSuccess : kFailure;
}

inline int cmd_ampleness(const RunConfig& cfg, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (int n = cfg.grid.n_min; n <= cfg.grid.n_max; ++n)
    for (int g = cfg.grid.genus_min; g <= cfg.grid.genus_max; ++g) {
      const SurfaceModel st(SurfaceKind::STilde, CurveContext::with_default_points(g));
      const AmpleReport r = is_ample_generator_test(st, lnnn_vanishing_witness(st, n));
      const Integer e_dot = r.dot_exceptional.empty() ? Integer(0) : r.dot_exceptional.front();
      rows.push_back({{"n", n},
                      {"g", g},
                      {"D2", to_int64(r.self_intersection)},
                      {"D_C0", to_int64(r.dot_section)},
                      {"D_f", to_int64(r.dot_fiber)},
                      {"D_Ei", to_int64(e_dot)},
                      {"positive", r.positive}});
      text << n << "," << g << "," << r.self_intersection << "," << r.dot_section << "," << r.dot_fiber << ","
           << e_dot << "," << (r.positive ? "true" : "false") << "\n";
    }
  if (cfg.format == Format::Json) {
    out << rows.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "n,g,D2,D_C0,D_f,D_Ei,positive\n" << text.str();
  } else {
    out << "| n | g | D2 | D_C0 | D_f | D_Ei | positive |\n|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      out << "| " << r["n"] << " | " << r["g"] << " | " << r["D2"] << " | " << r["D_C0"] << " | " << r["D_f"] << " | "
          << r["D_Ei"] << " | " << (r["positive"].get<bool>() ? "true" : "false") << " |\n";
  }
  return kSuccess;
}

inline int cmd_spectral(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.input);
  if (!in) {
    err << "error: cannot read " << cfg.input << "\n";
    return kConfigError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::optional<SpectralLocalData> data;
  try {
    data.emplace(parse_spectral_json(buf.str()));
  } catch (const SchemaError& e) {
    err << "error: " << cfg.input << ": " << e.what() << "\n";
    return kConfigError;
  }
  SpectralDescriptor desc;
  try {
    desc = build(HiggsCharData::from_local(*data), cfg.tolerance);
  } catch (const RootFindingError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  switch (cfg.format) {
    case Format::Json: out << spectral_report_json(desc).dump(2) << "\n"; break;
    case Format::Markdown: out << spectral_report_text(desc); break;
    case Format::Csv:
      out << "point,status,tails\n";
      for (const auto& p : desc.points) {
        out << p.id << "," << detail::status_name(p.status) << ",";
        for (std::size_t k = 0; k < p.tails.size(); ++k) out << (k ? ";" : "") << format_complex(p.tails[k]);
        out << "\n";
      }
      if (desc.tangency) out << "verdict," << (desc.tangency->pass ? "PASS" : "FAIL") << ",\n";
      break;
  }
  if (cfg.strict && desc.tangency && !desc.tangency->pass) return kFailure;
  return kSuccess;
}

/// Parse `args` (without the program name) and dispatch to a command.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor, cohomology and tangency computations for Hitchin spectral curves", "tangency"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "markdown";

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--genus-min", cfg.grid.genus_min, "smallest genus");
    sub->add_option("--genus-max", cfg.grid.genus_max, "largest genus");
    sub->add_option("--n-min", cfg.grid.n_min, "smallest spectral degree");
    sub->add_option("--n-max", cfg.grid.n_max, "largest spectral degree");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
    sub->add_option("--tolerance", cfg.tolerance, "numeric tolerance (relative)");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  };

  auto* tables = app.add_subcommand("tables", "dimension and genus formulas over an (n, g) grid");
  add_grid(tables);
  add_common(tables);
  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  add_grid(verify);
  add_common(verify);
  verify->add_option("--inject-fault", cfg.fault, "mutation test: canonical-class or cocycle-rule");
  auto* elm = app.add_subcommand("elm", "transition matrices and cocycle traces");
  add_common(elm);
  elm->add_option("--charts", cfg.charts, "number of charts (3..8)");
  auto* spectral = app.add_subcommand("spectral", "analyse local spectral data from a JSON file");
  add_common(spectral);
  spectral->add_option("input", cfg.input, "input JSON file")->required();
  spectral->add_flag("--strict", cfg.strict, "exit 1 when the tangency verdict is FAIL");
  auto* ample = app.add_subcommand("ampleness", "generator test for the vanishing witness class");
  add_grid(ample);
  add_common(ample);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Markdown;
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (cfg.command == "tables") return cmd_tables(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "elm") return cmd_elm(cfg, out);
    if (cfg.command == "ampleness") return cmd_ampleness(cfg, out);
    if (cfg.command == "spectral") return cmd_spectral(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kConfigError;
}

}  // namespace tangency::cli
