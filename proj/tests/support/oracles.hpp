#pragma once

// Test-only reference implementations, kept independent of the library's
// own algorithms on purpose.

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace axial::testing {

inline constexpr int kUnreachable = -1;

/// Cubic-time all-pairs shortest paths over an undirected unit-weight
/// edge list. Entry [i][j] is the step count or kUnreachable.
inline std::vector<std::vector<int>> floyd_warshall(std::size_t node_count,
                                                    const std::vector<std::pair<int, int>>& edges) {
  const int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> dist(node_count, std::vector<int>(node_count, kInf));
  for (std::size_t i = 0; i < node_count; ++i) dist[i][i] = 0;
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    dist[u][v] = 1;
    dist[v][u] = 1;
  }
  for (std::size_t k = 0; k < node_count; ++k) {
    for (std::size_t i = 0; i < node_count; ++i) {
      for (std::size_t j = 0; j < node_count; ++j) {
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
      }
    }
  }
  for (auto& row : dist) {
    for (auto& d : row) {
      if (d >= kInf) d = kUnreachable;
    }
  }
  return dist;
}

/// Expanded quadratic form of store A's profit, the algebraic route that
/// cross-checks price * quantity.
inline double quadratic_profit_a(double l, double a, double b, double c, double p1, double p2) {
  return 0.5 * (l + a - b) * p1 - p1 * p1 / (2.0 * c) + p1 * p2 / (2.0 * c);
}

inline double quadratic_profit_b(double l, double a, double b, double c, double p1, double p2) {
  return 0.5 * (l - a + b) * p2 - p2 * p2 / (2.0 * c) + p1 * p2 / (2.0 * c);
}

}  // namespace axial::testing
