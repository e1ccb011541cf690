#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "axial/errors.hpp"
#include "axial/space_id.hpp"

namespace axial {

/// Shortest-path step counts from one origin to every space reachable
/// from it. Spaces the origin cannot reach are absent from the map.
struct DepthProfile {
  SpaceId origin;
  std::map<SpaceId, int> steps;

  std::optional<int> steps_to(const SpaceId& space) const {
    auto it = steps.find(space);
    if (it == steps.end()) return std::nullopt;
    return it->second;
  }
};

/// Immutable, undirected, unweighted connectivity graph of named convex
/// spaces / axial lines with one designated root (the carrier space,
/// conventionally "outside").
///
/// Edges are normalized at build time: self-loops are dropped, duplicates
/// and reversed duplicates collapse to a single undirected edge. The graph
/// never changes after construction, so any number of threads may run
/// depth queries concurrently.
class SpatialGraph {
 public:
  std::size_t space_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t self_loops_dropped() const noexcept { return self_loops_dropped_; }
  std::size_t duplicate_edges_dropped() const noexcept { return duplicates_dropped_; }

  const SpaceId& root() const noexcept { return root_; }

  bool contains(const SpaceId& space) const { return index_of(space.str()).has_value(); }

  /// All space names, sorted ascending.
  std::vector<SpaceId> spaces() const {
    std::vector<SpaceId> out;
    out.reserve(names_.size());
    for (const auto& n : names_) out.emplace_back(n);
    return out;
  }

  /// Normalized edge list, each pair ordered (min, max), sorted ascending.
  std::vector<std::pair<SpaceId, SpaceId>> edges() const {
    std::vector<std::pair<SpaceId, SpaceId>> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_) out.emplace_back(SpaceId(names_[u]), SpaceId(names_[v]));
    return out;
  }

  std::vector<SpaceId> neighbors(const SpaceId& space) const {
    const auto idx = require(space);
    std::vector<SpaceId> out;
    out.reserve(adjacency_[idx].size());
    for (auto n : adjacency_[idx]) out.emplace_back(names_[n]);
    return out;
  }

  /// Breadth-first depth of every space reachable from `origin`.
  DepthProfile depth_profile(const SpaceId& origin) const {
    const auto dist = breadth_first_steps(require(origin));
    DepthProfile profile{origin, {}};
    for (std::size_t i = 0; i < dist.size(); ++i) {
      if (dist[i] >= 0) profile.steps.emplace(SpaceId(names_[i]), dist[i]);
    }
    return profile;
  }

  /// Sum of depths from `origin` to every other space. Requires that all
  /// spaces are reachable; otherwise names the unreachable ones.
  std::int64_t total_depth(const SpaceId& origin) const {
    const auto dist = breadth_first_steps(require(origin));
    std::int64_t total = 0;
    std::vector<std::string> unreachable;
    for (std::size_t i = 0; i < dist.size(); ++i) {
      if (dist[i] < 0) {
        unreachable.push_back(names_[i]);
      } else {
        total += dist[i];
      }
    }
    if (!unreachable.empty()) throw DisconnectedError(origin.str(), std::move(unreachable));
    return total;
  }

  /// Total depth divided by the number of spaces minus one.
  double mean_depth(const SpaceId& origin) const {
    if (space_count() < 2) {
      throw DegenerateGraphError("mean depth needs at least 2 spaces, graph has " +
                                 std::to_string(space_count()));
    }
    return static_cast<double>(total_depth(origin)) /
           static_cast<double>(space_count() - 1);
  }

  /// Raw step counts indexed like spaces(); -1 marks unreachable.
  std::vector<int> breadth_first_steps(std::uint32_t origin_index) const {
    std::vector<int> dist(names_.size(), -1);
    dist[origin_index] = 0;
    std::queue<std::uint32_t> frontier;
    frontier.push(origin_index);
    while (!frontier.empty()) {
      const auto node = frontier.front();
      frontier.pop();
      for (auto next : adjacency_[node]) {
        if (dist[next] < 0) {
          dist[next] = dist[node] + 1;
          frontier.push(next);
        }
      }
    }
    return dist;
  }

  std::optional<std::uint32_t> index_of(const std::string& name) const {
    const auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::uint32_t>(it - names_.begin());
  }

  std::uint32_t root_index() const noexcept { return root_index_; }
  const std::string& name_at(std::uint32_t index) const { return names_[index]; }

 private:
  friend SpatialGraph build_graph(const std::vector<std::pair<SpaceId, SpaceId>>&,
                                  const SpaceId&);

  SpatialGraph(std::vector<std::string> names,
               std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
               std::uint32_t root_index, std::size_t self_loops, std::size_t duplicates)
      : names_(std::move(names)),
        edges_(std::move(edges)),
        root_index_(root_index),
        root_(names_[root_index_]),
        self_loops_dropped_(self_loops),
        duplicates_dropped_(duplicates),
        adjacency_(names_.size()) {
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::uint32_t require(const SpaceId& space) const {
    const auto idx = index_of(space.str());
    if (!idx) throw UnknownSpaceError(space.str());
    return *idx;
  }

  std::vector<std::string> names_;  // sorted
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::uint32_t root_index_;
  SpaceId root_;
  std::size_t self_loops_dropped_;
  std::size_t duplicates_dropped_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Builds a normalized SpatialGraph from an undirected edge list.
///
/// Self-loops are dropped (counted), duplicate and reversed edges collapse
/// to one. Connectivity is not enforced here; the aggregate operations
/// check it when they need it.
inline SpatialGraph build_graph(const std::vector<std::pair<SpaceId, SpaceId>>& edge_list,
                                const SpaceId& root) {
  std::size_t self_loops = 0;
  std::vector<std::pair<std::string, std::string>> kept;
  kept.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) {
    if (u == v) {
      ++self_loops;
      continue;
    }
    auto a = u.str();
    auto b = v.str();
    if (b < a) std::swap(a, b);
    kept.emplace_back(std::move(a), std::move(b));
  }
  std::sort(kept.begin(), kept.end());
  const auto last = std::unique(kept.begin(), kept.end());
  const std::size_t duplicates = static_cast<std::size_t>(kept.end() - last);
  kept.erase(last, kept.end());
  if (kept.empty()) throw EmptyGraphError();

  std::vector<std::string> names;
  names.reserve(kept.size() * 2);
  for (const auto& [a, b] : kept) {
    names.push_back(a);
    names.push_back(b);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  const auto root_it = std::lower_bound(names.begin(), names.end(), root.str());
  if (root_it == names.end() || *root_it != root.str()) throw RootMissingError(root.str());
  const auto root_index = static_cast<std::uint32_t>(root_it - names.begin());

  const auto index_of = [&names](const std::string& n) {
    return static_cast<std::uint32_t>(std::lower_bound(names.begin(), names.end(), n) -
                                      names.begin());
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(kept.size());
  for (const auto& [a, b] : kept) {
    auto i = index_of(a);
    auto j = index_of(b);
    if (j < i) std::swap(i, j);
    edges.emplace_back(i, j);
  }
  std::sort(edges.begin(), edges.end());
  return SpatialGraph(std::move(names), std::move(edges), root_index, self_loops, duplicates);
}

}  // namespace axial
