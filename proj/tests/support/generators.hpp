#pragma once

// Deterministic input generators for the property-style tests.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "axial/graph.hpp"
#include "axial/hotelling.hpp"
#include "axial/space_id.hpp"

namespace axial::testing {

struct EdgeListModel {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // undirected, by node index
};

inline std::string node_name(int index) { return "s" + std::to_string(index); }

/// Random connected graph: a random spanning tree plus a few extra edges.
inline EdgeListModel random_connected_edges(std::mt19937& rng, int min_nodes = 2,
                                            int max_nodes = 12) {
  EdgeListModel model;
  model.node_count = std::uniform_int_distribution<int>(min_nodes, max_nodes)(rng);
  for (int i = 1; i < model.node_count; ++i) {
    const int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
    model.edges.emplace_back(parent, i);
  }
  const int extra = std::uniform_int_distribution<int>(0, model.node_count)(rng);
  std::uniform_int_distribution<int> pick(0, model.node_count - 1);
  for (int e = 0; e < extra; ++e) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u != v) model.edges.emplace_back(u, v);
  }
  return model;
}

inline std::vector<std::pair<SpaceId, SpaceId>> to_space_edges(const EdgeListModel& model) {
  std::vector<std::pair<SpaceId, SpaceId>> out;
  out.reserve(model.edges.size());
  for (const auto& [u, v] : model.edges) {
    out.emplace_back(SpaceId(node_name(u)), SpaceId(node_name(v)));
  }
  return out;
}

inline SpatialGraph random_connected_graph(std::mt19937& rng, int min_nodes = 2,
                                           int max_nodes = 12) {
  const auto model = random_connected_edges(rng, min_nodes, max_nodes);
  return build_graph(to_space_edges(model), SpaceId(node_name(0)));
}

/// Random market with a + b <= max_hinterland_fraction * l.
inline MarketConfig random_market(std::mt19937& rng, double max_hinterland_fraction = 0.9) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  MarketConfig m;
  m.line_length = 1.0 + 99.0 * unit(rng);
  m.transport_cost = 0.1 + 9.9 * unit(rng);
  const double budget = max_hinterland_fraction * m.line_length;
  m.offset_a = unit(rng) * budget;
  m.offset_b = unit(rng) * (budget - m.offset_a);
  return m;
}

/// Random prices that keep both no-undercut conditions strictly true.
inline PricePair random_competitive_prices(std::mt19937& rng, const MarketConfig& m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double scale = m.transport_cost * m.line_length;
  const double mid = (0.5 + 0.5 * unit(rng)) * scale;
  const double spread =
      (unit(rng) - 0.5) * 0.9 * m.transport_cost * m.contested_length();
  return PricePair{mid + 0.5 * spread, mid - 0.5 * spread};
}

}  // namespace axial::testing
