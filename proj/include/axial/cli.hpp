#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axial/graph.hpp"
#include "axial/hotelling.hpp"
#include "axial/mapfile.hpp"
#include "axial/render.hpp"
#include "axial/syntax.hpp"
#include "axial/version.hpp"

namespace axial {

/// Documented exit codes. Usage errors keep CLI11's own codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitDisconnected = 2,
  kExitUnknownSpace = 3,
  kExitInvalidMarket = 4,
};

namespace cli_detail {

enum class MapFormat { kAuto, kFact, kCsv };

/// Input file could not be read at all.
class FileReadError : public Error {
 public:
  explicit FileReadError(const std::string& path) : Error("cannot open '" + path + "'") {}
};

struct MapOptions {
  std::string path;
  std::string root = kDefaultRootName;
  std::string format = "text";
  std::string input_format = "auto";
  bool strict = false;
};

inline bool read_file(const std::string& path, std::string& bytes, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open '" + path + "'";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  bytes = buffer.str();
  return true;
}

inline MapFormat detect_map_format(const std::string& path, const std::string& override_name) {
  if (override_name == "fact") return MapFormat::kFact;
  if (override_name == "csv") return MapFormat::kCsv;
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return MapFormat::kCsv;
  return MapFormat::kFact;  // .pl and anything else: the fact dialect
}

inline void print_issues(std::ostream& err, const std::string& path,
                         const ParseDiagnostics& diagnostics) {
  for (const auto& issue : diagnostics.errors) {
    err << path << ':' << issue.line << ": " << issue.message << '\n';
  }
}

/// Loads, parses, and builds the graph. Throws the library's errors.
inline SpatialGraph load_graph(const MapOptions& options, std::ostream& err, std::string& bytes) {
  std::string error;
  if (!read_file(options.path, bytes, error)) throw FileReadError(options.path);

  const auto format = detect_map_format(options.path, options.input_format);
  ParseResult parsed;
  try {
    parsed = format == MapFormat::kCsv ? parse_csv_edges(bytes)
                                       : parse_fact_file(bytes, options.strict);
  } catch (const EmptyInputError& e) {
    print_issues(err, options.path, e.diagnostics());
    throw;
  }
  print_issues(err, options.path, parsed.diagnostics);  // non-fatal line errors

  auto edges = to_edge_list(parsed.facts);
  if (edges.self_loops_dropped > 0) {
    err << options.path << ": dropped " << edges.self_loops_dropped << " self-loop(s)\n";
  }
  return build_graph(edges.edges, SpaceId(options.root));
}

inline OutputFormat output_format(const MapOptions& options) {
  return parse_output_format(options.format).value_or(OutputFormat::kText);
}

}  // namespace cli_detail

/// Runs the command line given args (program name excluded). Writes the
/// report to `out` and diagnostics to `err`; returns the exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using cli_detail::MapOptions;

  CLI::App app{"Axial-map depth measures and the linear-city duopoly model"};
  app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kVersion));
  app.require_subcommand(1);

  bool no_meta = false;
  app.add_flag("--no-meta", no_meta,
               "omit the timestamp from report metadata (byte-reproducible output)");

  const auto add_map_options = [&no_meta](CLI::App* cmd, MapOptions& options) {
    cmd->fallthrough(true);
    cmd->add_option("map", options.path, "connectivity map file (.pl facts or .csv edges)")
        ->required();
    cmd->add_option("--root", options.root, "root/carrier space name")
        ->capture_default_str();
    cmd->add_option("--format", options.format, "output format: text, csv, json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--input-format", options.input_format,
                    "input format override: auto, fact, csv")
        ->check(CLI::IsMember({"auto", "fact", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--strict", options.strict, "reject whitespace inside facts");
  };

  // analyze
  MapOptions analyze_options;
  auto* analyze_cmd = app.add_subcommand("analyze", "depth, md_o, and d-value for every space");
  add_map_options(analyze_cmd, analyze_options);

  // dvalue
  MapOptions dvalue_options;
  std::string dvalue_space;
  auto* dvalue_cmd = app.add_subcommand("dvalue", "d-value of a single space");
  add_map_options(dvalue_cmd, dvalue_options);
  dvalue_cmd->add_option("--space", dvalue_space, "space to report")->required();

  // site-score
  MapOptions site_options;
  int site_top = 0;
  auto* site_cmd = app.add_subcommand("site-score", "rank spaces by |d-value - 1|, best first");
  add_map_options(site_cmd, site_options);
  site_cmd->add_option("--top", site_top, "keep only the N best-ranked spaces")
      ->check(CLI::PositiveNumber);

  // hotelling
  MarketConfig market;
  std::string hotelling_mode = "closed";
  std::string hotelling_format = "text";
  double solver_tol = 1e-9;
  std::size_t solver_max_iter = 1000;
  auto* hotelling_cmd =
      app.add_subcommand("hotelling", "linear-city duopoly equilibrium for given parameters");
  hotelling_cmd->fallthrough(true);
  hotelling_cmd->add_option("--l", market.line_length, "line length")->required();
  hotelling_cmd->add_option("--a", market.offset_a, "store A's distance from its end")
      ->required();
  hotelling_cmd->add_option("--b", market.offset_b, "store B's distance from its end")
      ->required();
  hotelling_cmd->add_option("--c", market.transport_cost, "transport cost per unit distance")
      ->required();
  hotelling_cmd->add_option("--mode", hotelling_mode, "solver: closed, numeric, both")
      ->check(CLI::IsMember({"closed", "numeric", "both"}))
      ->capture_default_str();
  hotelling_cmd->add_option("--format", hotelling_format, "output format: text, csv, json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  hotelling_cmd->add_option("--tol", solver_tol, "numeric solver price tolerance")
      ->capture_default_str();
  hotelling_cmd->add_option("--max-iter", solver_max_iter, "numeric solver iteration cap")
      ->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out, usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code;
  }

  const auto run_map_command = [&](const MapOptions& options,
                                   const auto& body) -> int {
    std::string bytes;
    try {
      const SpatialGraph graph = cli_detail::load_graph(options, err, bytes);
      const SyntaxReport report = syntax_report(graph);
      const auto meta = RunMeta::for_input(bytes, !no_meta);
      return body(report, meta);
    } catch (const cli_detail::FileReadError& e) {
      err << e.what() << '\n';
      return kExitParse;
    } catch (const EmptyInputError& e) {
      err << options.path << ": " << e.what() << '\n';
      return kExitParse;
    } catch (const EmptyGraphError& e) {
      err << options.path << ": " << e.what() << '\n';
      return kExitParse;
    } catch (const RootMissingError& e) {
      err << options.path << ": " << e.what() << '\n';
      return kExitUnknownSpace;
    } catch (const UnknownSpaceError& e) {
      err << options.path << ": " << e.what() << '\n';
      return kExitUnknownSpace;
    } catch (const DisconnectedError& e) {
      err << options.path << ": " << e.what() << '\n';
      return kExitDisconnected;
    } catch (const DegenerateGraphError& e) {
      err << options.path << ": " << e.what() << '\n';
      return kExitDisconnected;
    } catch (const InvalidSpaceNameError& e) {
      err << options.path << ": " << e.what() << '\n';
      return kExitUnknownSpace;
    }
  };

  if (*analyze_cmd) {
    return run_map_command(analyze_options,
                           [&](const SyntaxReport& report, const RunMeta& meta) -> int {
      out << render_analyze(report, cli_detail::output_format(analyze_options), meta);
      return kExitOk;
    });
  }

  if (*dvalue_cmd) {
    return run_map_command(dvalue_options,
                           [&](const SyntaxReport& report, const RunMeta& meta) -> int {
      if (dvalue_space == report.root.str()) {
        err << "space '" << dvalue_space << "' is the root; it carries no d-value row\n";
        return kExitUnknownSpace;
      }
      const auto row = std::find_if(report.rows.begin(), report.rows.end(),
                                    [&](const SyntaxRow& r) { return r.space.str() == dvalue_space; });
      if (row == report.rows.end()) throw UnknownSpaceError(dvalue_space);
      out << render_dvalue(report, *row, cli_detail::output_format(dvalue_options), meta);
      return kExitOk;
    });
  }

  if (*site_cmd) {
    return run_map_command(site_options,
                           [&](const SyntaxReport& report, const RunMeta& meta) -> int {
      auto ranking = site_score(report);
      if (site_top > 0 && static_cast<std::size_t>(site_top) < ranking.size()) {
        ranking.erase(ranking.begin() + site_top, ranking.end());
      }
      out << render_site_score(report, ranking, cli_detail::output_format(site_options), meta);
      return kExitOk;
    });
  }

  if (*hotelling_cmd) {
    try {
      market.validate();
      HotellingRun run;
      run.config = market;
      if (hotelling_mode == "closed" || hotelling_mode == "both") {
        run.closed = equilibrium(market);
      }
      if (hotelling_mode == "numeric" || hotelling_mode == "both") {
        const auto solved = best_response_solve(market, solver_tol, solver_max_iter);
        run.numeric = solved.equilibrium;
        run.numeric_iterations = solved.iterations;
      }
      if (run.closed && run.numeric) {
        run.max_price_discrepancy =
            std::max(std::abs(run.closed->prices.price_a - run.numeric->prices.price_a),
                     std::abs(run.closed->prices.price_b - run.numeric->prices.price_b));
      }
      const std::string canonical = "hotelling:l=" + format_full(market.line_length) +
                                    ",a=" + format_full(market.offset_a) +
                                    ",b=" + format_full(market.offset_b) +
                                    ",c=" + format_full(market.transport_cost);
      const auto meta = RunMeta::for_input(canonical, !no_meta);
      const auto format = parse_output_format(hotelling_format).value_or(OutputFormat::kText);
      out << render_hotelling(run, format, meta);
      return kExitOk;
    } catch (const InvalidMarketError& e) {
      err << e.what() << '\n';
      return kExitInvalidMarket;
    } catch (const NoConvergenceError& e) {
      err << e.what() << '\n';
      return kExitInvalidMarket;
    }
  }

  err << "no command given\n";
  return kExitParse;
}

}  // namespace axial
