#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "axial/errors.hpp"
#include "axial/graph.hpp"
#include "axial/space_id.hpp"

namespace axial {

/// One interior space: its depth from the root and its d-value, the
/// ratio of that depth to the mean depth of all interior spaces.
struct SyntaxRow {
  SpaceId space;
  int depth;       // steps from the root ("depth from outside")
  double d_value;  // depth / mean depth
};

/// Per-space depth table for a whole settlement, measured from the root.
/// The root itself takes part in the paths but never gets a row and is
/// excluded from the mean's denominator.
struct SyntaxReport {
  SpaceId root;
  std::vector<SyntaxRow> rows;       // sorted by (depth asc, name asc)
  double mean_depth;                 // MD_o: mean of interior depths
  int max_depth;                     // deepest interior space
  std::size_t interior_space_count;  // spaces excluding the root
};

/// Computes depth, mean depth and d-value for every space other than the
/// root. The graph must be connected from the root and have at least one
/// interior space.
inline SyntaxReport syntax_report(const SpatialGraph& graph) {
  if (graph.space_count() < 2) {
    throw DegenerateGraphError("syntax report needs at least one space besides the root '" +
                               graph.root().str() + "'");
  }
  const auto dist = graph.breadth_first_steps(graph.root_index());
  std::vector<std::string> unreachable;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] < 0) unreachable.push_back(graph.name_at(static_cast<std::uint32_t>(i)));
  }
  if (!unreachable.empty()) throw DisconnectedError(graph.root().str(), std::move(unreachable));

  const std::size_t interior = graph.space_count() - 1;
  std::int64_t total = 0;
  for (int d : dist) total += d;  // root contributes 0
  const double mean = static_cast<double>(total) / static_cast<double>(interior);

  SyntaxReport report{graph.root(), {}, mean, 0, interior};
  report.rows.reserve(interior);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const auto index = static_cast<std::uint32_t>(i);
    if (index == graph.root_index()) continue;
    report.rows.push_back(
        SyntaxRow{SpaceId(graph.name_at(index)), dist[i], static_cast<double>(dist[i]) / mean});
    report.max_depth = std::max(report.max_depth, dist[i]);
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const SyntaxRow& a, const SyntaxRow& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.space < b.space;
  });
  return report;
}

/// Location band relative to the settlement: near its end, near its
/// centre, or in between (where a d-value sits close to 1).
enum class LocationBand { kEndOfSettlement, kIntermediate, kCentral };

inline std::string_view to_string(LocationBand band) {
  switch (band) {
    case LocationBand::kEndOfSettlement: return "end-of-settlement";
    case LocationBand::kCentral: return "central";
    case LocationBand::kIntermediate: break;
  }
  return "intermediate";
}

/// d-value cutoffs for the location bands. Defaults split the named
/// regimes at 0.5 and 1.5.
struct BandThresholds {
  double end_below = 0.5;     // d-value below this: end-of-settlement
  double central_above = 1.5; // d-value above this: central
};

/// One ranked location: lower score = d-value closer to 1 = better site.
struct RankedSite {
  SpaceId space;
  double d_value;
  double score;  // |d_value - 1|
  LocationBand band;
};

/// Ranks every interior space by |d-value - 1|, best first, ties broken
/// by name. The comparison runs on the exact integer form
/// |depth * interior_count - total_depth| so that spaces whose true
/// scores coincide tie exactly regardless of rounding.
inline std::vector<RankedSite> site_score(const SyntaxReport& report,
                                          const BandThresholds& bands = {}) {
  std::int64_t total = 0;
  for (const auto& row : report.rows) total += row.depth;
  const auto interior = static_cast<std::int64_t>(report.interior_space_count);

  struct Keyed {
    std::int64_t key;
    RankedSite site;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(report.rows.size());
  for (const auto& row : report.rows) {
    const std::int64_t key = std::llabs(row.depth * interior - total);
    const double score = static_cast<double>(key) / static_cast<double>(total);
    LocationBand band = LocationBand::kIntermediate;
    if (row.d_value < bands.end_below) {
      band = LocationBand::kEndOfSettlement;
    } else if (row.d_value > bands.central_above) {
      band = LocationBand::kCentral;
    }
    keyed.push_back(Keyed{key, RankedSite{row.space, row.d_value, score, band}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.site.space < b.site.space;
  });
  std::vector<RankedSite> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.site));
  return out;
}

}  // namespace axial
