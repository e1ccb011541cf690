#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "axial/hotelling.hpp"
#include "axial/syntax.hpp"
#include "axial/version.hpp"

namespace axial {

enum class OutputFormat { kText, kCsv, kJson };

inline std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

/// Fixed-point rendering used by the text format (2 decimals by default).
inline std::string format_fixed(double value, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

/// Shortest round-trip rendering, used wherever full precision matters.
inline std::string format_full(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

/// FNV-1a 64-bit content digest for the meta block.
inline std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

inline std::string utc_timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Provenance attached to every report. The timestamp is optional so
/// that runs can be made byte-reproducible (--no-meta).
struct RunMeta {
  std::string input_digest;  // "fnv1a64:<hex>"
  std::optional<std::string> timestamp;

  static RunMeta for_input(std::string_view bytes, bool with_timestamp) {
    RunMeta meta;
    meta.input_digest = "fnv1a64:" + fnv1a64_hex(bytes);
    if (with_timestamp) meta.timestamp = utc_timestamp_now();
    return meta;
  }
};

namespace detail {

inline nlohmann::json meta_json(const RunMeta& meta) {
  nlohmann::json j{{"tool", std::string(kToolName)},
                   {"version", std::string(kVersion)},
                   {"input_digest", meta.input_digest}};
  if (meta.timestamp) j["timestamp"] = *meta.timestamp;
  return j;
}

inline std::string meta_comments(const RunMeta& meta) {
  std::string out;
  out += "# ";
  out += kToolName;
  out += ' ';
  out += kVersion;
  out += '\n';
  out += "# input: " + meta.input_digest + '\n';
  if (meta.timestamp) out += "# generated: " + *meta.timestamp + '\n';
  return out;
}

inline std::string envelope_json(const RunMeta& meta, nlohmann::json result) {
  const nlohmann::json envelope{{"meta", meta_json(meta)}, {"result", std::move(result)}};
  return envelope.dump(2) + "\n";
}

inline std::string csv_cell(const std::string& s) { return s; }  // atoms never need quoting

}  // namespace detail

// ---------------------------------------------------------------------------
// analyze

inline nlohmann::json syntax_report_json(const SyntaxReport& report) {
  nlohmann::json spaces = nlohmann::json::array();
  for (const auto& row : report.rows) {
    spaces.push_back({{"space", row.space.str()},
                      {"depth_from_outside", row.depth},
                      {"d_value", row.d_value}});
  }
  return {{"root", report.root.str()},
          {"md_o", report.mean_depth},
          {"max_depth", report.max_depth},
          {"space_count_excluding_root", report.interior_space_count},
          {"spaces", std::move(spaces)}};
}

inline std::string render_analyze(const SyntaxReport& report, OutputFormat format,
                                  const RunMeta& meta) {
  switch (format) {
    case OutputFormat::kJson:
      return detail::envelope_json(meta, syntax_report_json(report));
    case OutputFormat::kCsv: {
      std::string out = detail::meta_comments(meta);
      out += "# root: " + report.root.str() + '\n';
      out += "# md_o: " + format_full(report.mean_depth) + '\n';
      out += "# max_depth: " + std::to_string(report.max_depth) + '\n';
      out += "# space_count_excluding_root: " + std::to_string(report.interior_space_count) + '\n';
      out += "space,depth_from_outside,d_value\n";
      for (const auto& row : report.rows) {
        out += row.space.str() + ',' + std::to_string(row.depth) + ',' +
               format_full(row.d_value) + '\n';
      }
      return out;
    }
    case OutputFormat::kText: break;
  }
  std::size_t width = 5;
  for (const auto& row : report.rows) width = std::max(width, row.space.str().size());
  std::string out;
  out += "root: " + report.root.str() + '\n';
  out += "spaces excluding root: " + std::to_string(report.interior_space_count) + '\n';
  out += "mean depth from outside (md_o): " + format_fixed(report.mean_depth) + '\n';
  out += "max depth: " + std::to_string(report.max_depth) + "\n\n";
  out += "space";
  out.append(width - 5 + 2, ' ');
  out += "depth  d-value\n";
  for (const auto& row : report.rows) {
    out += row.space.str();
    out.append(width - row.space.str().size() + 2, ' ');
    std::string depth = std::to_string(row.depth);
    out += depth;
    out.append(depth.size() < 5 ? 5 - depth.size() + 2 : 2, ' ');
    out += format_fixed(row.d_value) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// dvalue

inline std::string render_dvalue(const SyntaxReport& report, const SyntaxRow& row,
                                 OutputFormat format, const RunMeta& meta) {
  switch (format) {
    case OutputFormat::kJson:
      return detail::envelope_json(meta, {{"root", report.root.str()},
                                          {"space", row.space.str()},
                                          {"depth_from_outside", row.depth},
                                          {"md_o", report.mean_depth},
                                          {"d_value", row.d_value}});
    case OutputFormat::kCsv: {
      std::string out = detail::meta_comments(meta);
      out += "space,depth_from_outside,md_o,d_value\n";
      out += row.space.str() + ',' + std::to_string(row.depth) + ',' +
             format_full(report.mean_depth) + ',' + format_full(row.d_value) + '\n';
      return out;
    }
    case OutputFormat::kText: break;
  }
  std::string out;
  out += "space: " + row.space.str() + '\n';
  out += "depth from outside: " + std::to_string(row.depth) + '\n';
  out += "md_o: " + format_fixed(report.mean_depth) + '\n';
  out += "d-value: " + format_fixed(row.d_value) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// site-score

inline std::string render_site_score(const SyntaxReport& report,
                                     const std::vector<RankedSite>& ranking, OutputFormat format,
                                     const RunMeta& meta) {
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::json rows = nlohmann::json::array();
      std::size_t rank = 0;
      for (const auto& site : ranking) {
        rows.push_back({{"rank", ++rank},
                        {"space", site.space.str()},
                        {"d_value", site.d_value},
                        {"score", site.score},
                        {"band", std::string(to_string(site.band))}});
      }
      return detail::envelope_json(
          meta, {{"root", report.root.str()}, {"md_o", report.mean_depth},
                 {"ranking", std::move(rows)}});
    }
    case OutputFormat::kCsv: {
      std::string out = detail::meta_comments(meta);
      out += "rank,space,d_value,score,band\n";
      std::size_t rank = 0;
      for (const auto& site : ranking) {
        out += std::to_string(++rank) + ',' + site.space.str() + ',' +
               format_full(site.d_value) + ',' + format_full(site.score) + ',' +
               std::string(to_string(site.band)) + '\n';
      }
      return out;
    }
    case OutputFormat::kText: break;
  }
  std::size_t width = 5;
  for (const auto& site : ranking) width = std::max(width, site.space.str().size());
  std::string out = "rank  space";
  out.append(width - 5 + 2, ' ');
  out += "d-value  score  band\n";
  std::size_t rank = 0;
  for (const auto& site : ranking) {
    std::string r = std::to_string(++rank);
    out += r;
    out.append(r.size() < 4 ? 4 - r.size() + 2 : 2, ' ');
    out += site.space.str();
    out.append(width - site.space.str().size() + 2, ' ');
    out += format_fixed(site.d_value) + "     " + format_fixed(site.score) + "   " +
           std::string(to_string(site.band)) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// hotelling

inline nlohmann::json equilibrium_json(const Equilibrium& eq) {
  return {{"p1", eq.prices.price_a},
          {"p2", eq.prices.price_b},
          {"x", eq.split.share_a},
          {"y", eq.split.share_b},
          {"q1", eq.split.quantity_a},
          {"q2", eq.split.quantity_b},
          {"pi1", eq.profit_a},
          {"pi2", eq.profit_b},
          {"valid", eq.valid},
          {"violations", eq.violations}};
}

struct HotellingRun {
  MarketConfig config;
  std::optional<Equilibrium> closed;
  std::optional<Equilibrium> numeric;
  std::size_t numeric_iterations = 0;
  std::optional<double> max_price_discrepancy;  // only in "both" mode
};

inline std::string render_hotelling(const HotellingRun& run, OutputFormat format,
                                    const RunMeta& meta) {
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::json result{{"config",
                             {{"l", run.config.line_length},
                              {"a", run.config.offset_a},
                              {"b", run.config.offset_b},
                              {"c", run.config.transport_cost}}}};
      if (run.closed) result["closed"] = equilibrium_json(*run.closed);
      if (run.numeric) {
        result["numeric"] = equilibrium_json(*run.numeric);
        result["numeric"]["iterations"] = run.numeric_iterations;
      }
      if (run.max_price_discrepancy) {
        result["max_price_discrepancy"] = *run.max_price_discrepancy;
      }
      return detail::envelope_json(meta, std::move(result));
    }
    case OutputFormat::kCsv: {
      std::string out = detail::meta_comments(meta);
      if (run.max_price_discrepancy) {
        out += "# max_price_discrepancy: " + format_full(*run.max_price_discrepancy) + '\n';
      }
      out += "solver,p1,p2,x,y,q1,q2,pi1,pi2,valid,violations\n";
      const auto emit = [&out](const char* solver, const Equilibrium& eq) {
        out += solver;
        out += ',' + format_full(eq.prices.price_a) + ',' + format_full(eq.prices.price_b);
        out += ',' + format_full(eq.split.share_a) + ',' + format_full(eq.split.share_b);
        out += ',' + format_full(eq.split.quantity_a) + ',' + format_full(eq.split.quantity_b);
        out += ',' + format_full(eq.profit_a) + ',' + format_full(eq.profit_b);
        out += eq.valid ? ",true," : ",false,";
        for (std::size_t i = 0; i < eq.violations.size(); ++i) {
          if (i) out += ';';
          out += eq.violations[i];
        }
        out += '\n';
      };
      if (run.closed) emit("closed", *run.closed);
      if (run.numeric) emit("numeric", *run.numeric);
      return out;
    }
    case OutputFormat::kText: break;
  }
  std::string out;
  out += "config: l=" + format_fixed(run.config.line_length) +
         " a=" + format_fixed(run.config.offset_a) + " b=" + format_fixed(run.config.offset_b) +
         " c=" + format_fixed(run.config.transport_cost) + '\n';
  const auto emit = [&out](const std::string& title, const Equilibrium& eq) {
    out += title + ":\n";
    out += "  p1=" + format_fixed(eq.prices.price_a) + "  p2=" + format_fixed(eq.prices.price_b) +
           '\n';
    out += "  x=" + format_fixed(eq.split.share_a) + "  y=" + format_fixed(eq.split.share_b) +
           '\n';
    out += "  q1=" + format_fixed(eq.split.quantity_a) +
           "  q2=" + format_fixed(eq.split.quantity_b) + '\n';
    out += "  pi1=" + format_fixed(eq.profit_a) + "  pi2=" + format_fixed(eq.profit_b) + '\n';
    out += std::string("  valid: ") + (eq.valid ? "yes" : "no");
    if (!eq.violations.empty()) {
      out += " (";
      for (std::size_t i = 0; i < eq.violations.size(); ++i) {
        if (i) out += ", ";
        out += eq.violations[i];
      }
      out += ')';
    }
    out += '\n';
  };
  if (run.closed) emit("closed-form equilibrium", *run.closed);
  if (run.numeric) {
    emit("numeric equilibrium (best response, " + std::to_string(run.numeric_iterations) +
             " iterations)",
         *run.numeric);
  }
  if (run.max_price_discrepancy) {
    out += "max price discrepancy: " + format_full(*run.max_price_discrepancy) + '\n';
  }
  return out;
}

}  // namespace axial
