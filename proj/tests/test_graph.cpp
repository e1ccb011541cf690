#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "axial/graph.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using axial::build_graph;
using axial::SpaceId;
using axial::SpatialGraph;

namespace {

SpatialGraph chain_cab() {
  // three spaces in a row: c -- a -- b
  return build_graph({{SpaceId("c"), SpaceId("a")}, {SpaceId("a"), SpaceId("b")}}, SpaceId("c"));
}

}  // namespace

TEST_CASE("space names are validated tokens", "[graph]") {
  CHECK(SpaceId::is_valid("outside"));
  CHECK(SpaceId::is_valid("pcta_grao_vasco"));
  CHECK(SpaceId::is_valid("B2"));
  CHECK_FALSE(SpaceId::is_valid(""));
  CHECK_FALSE(SpaceId::is_valid("a b"));
  CHECK_FALSE(SpaceId::is_valid("a-b"));
  CHECK_THROWS_AS(SpaceId("não"), axial::InvalidSpaceNameError);
}

TEST_CASE("build_graph normalizes the edge list", "[graph]") {
  SECTION("three-space chain") {
    const auto g = chain_cab();
    CHECK(g.space_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.root().str() == "c");
  }

  SECTION("duplicates and self-loops are dropped") {
    const auto g = build_graph(
        {{SpaceId("a"), SpaceId("b")}, {SpaceId("b"), SpaceId("a")}, {SpaceId("a"), SpaceId("a")}},
        SpaceId("a"));
    CHECK(g.space_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.self_loops_dropped() == 1);
    CHECK(g.duplicate_edges_dropped() == 1);
  }

  SECTION("missing root") {
    CHECK_THROWS_AS(build_graph({{SpaceId("a"), SpaceId("b")}}, SpaceId("z")),
                    axial::RootMissingError);
  }

  SECTION("nothing survives normalization") {
    CHECK_THROWS_AS(build_graph({{SpaceId("a"), SpaceId("a")}}, SpaceId("a")),
                    axial::EmptyGraphError);
    CHECK_THROWS_AS(build_graph({}, SpaceId("a")), axial::EmptyGraphError);
  }
}

TEST_CASE("depth profile counts breadth-first steps", "[graph]") {
  const auto g = chain_cab();

  SECTION("from the chain's end") {
    const auto profile = g.depth_profile(SpaceId("c"));
    REQUIRE(profile.steps.size() == 3);
    CHECK(profile.steps.at(SpaceId("c")) == 0);
    CHECK(profile.steps.at(SpaceId("a")) == 1);
    CHECK(profile.steps.at(SpaceId("b")) == 2);
  }

  SECTION("origin is always at depth zero") {
    for (const auto& space : g.spaces()) {
      CHECK(g.depth_profile(space).steps.at(space) == 0);
    }
  }

  SECTION("unknown origin") {
    CHECK_THROWS_AS(g.depth_profile(SpaceId("zz")), axial::UnknownSpaceError);
  }

  SECTION("unreachable spaces are omitted, not errors") {
    const auto split = build_graph(
        {{SpaceId("a"), SpaceId("b")}, {SpaceId("x"), SpaceId("y")}}, SpaceId("a"));
    const auto profile = split.depth_profile(SpaceId("a"));
    CHECK(profile.steps.size() == 2);
    CHECK_FALSE(profile.steps_to(SpaceId("x")).has_value());
  }
}

TEST_CASE("total depth sums steps to every other space", "[graph]") {
  const auto g = chain_cab();
  CHECK(g.total_depth(SpaceId("c")) == 3);
  CHECK(g.total_depth(SpaceId("b")) == 3);
  CHECK(g.total_depth(SpaceId("a")) == 2);

  const auto pair = build_graph({{SpaceId("a"), SpaceId("b")}}, SpaceId("a"));
  CHECK(pair.total_depth(SpaceId("a")) == 1);

  SECTION("disconnection is an error that names the missing spaces") {
    const auto split = build_graph(
        {{SpaceId("a"), SpaceId("b")}, {SpaceId("x"), SpaceId("y")}}, SpaceId("a"));
    try {
      split.total_depth(SpaceId("a"));
      FAIL("expected DisconnectedError");
    } catch (const axial::DisconnectedError& e) {
      CHECK(e.unreachable() == std::vector<std::string>{"x", "y"});
    }
  }
}

TEST_CASE("mean depth divides by the space count minus one", "[graph]") {
  const auto g = chain_cab();
  CHECK(g.mean_depth(SpaceId("a")) == 1.0);
  CHECK(g.mean_depth(SpaceId("b")) == 1.5);
  CHECK(g.mean_depth(SpaceId("c")) == 1.5);

  SECTION("star centres sit at mean depth 1 for any size") {
    for (int leaves : {1, 3, 7, 20}) {
      std::vector<std::pair<SpaceId, SpaceId>> edges;
      for (int i = 0; i < leaves; ++i) {
        edges.emplace_back(SpaceId("hub"), SpaceId(axial::testing::node_name(i)));
      }
      const auto star = build_graph(edges, SpaceId("hub"));
      CHECK(star.mean_depth(SpaceId("hub")) == 1.0);
    }
  }
}

TEST_CASE("depths match a brute-force all-pairs oracle", "[graph][property]") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 60; ++round) {
    const auto model = axial::testing::random_connected_edges(rng);
    const auto g = build_graph(axial::testing::to_space_edges(model),
                               SpaceId(axial::testing::node_name(0)));
    const auto oracle = axial::testing::floyd_warshall(
        static_cast<std::size_t>(model.node_count), model.edges);
    for (int u = 0; u < model.node_count; ++u) {
      const auto profile = g.depth_profile(SpaceId(axial::testing::node_name(u)));
      for (int v = 0; v < model.node_count; ++v) {
        const auto steps = profile.steps_to(SpaceId(axial::testing::node_name(v)));
        REQUIRE(steps.has_value());
        REQUIRE(*steps == oracle[u][v]);
      }
    }
  }
}

TEST_CASE("depth is symmetric between any two spaces", "[graph][property]") {
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    const auto g = axial::testing::random_connected_graph(rng);
    const auto spaces = g.spaces();
    for (const auto& u : spaces) {
      const auto from_u = g.depth_profile(u);
      for (const auto& v : spaces) {
        CHECK(from_u.steps.at(v) == g.depth_profile(v).steps.at(u));
      }
    }
  }
}

TEST_CASE("adjacent spaces differ by at most one step from any origin", "[graph][property]") {
  std::mt19937 rng(99);
  for (int round = 0; round < 40; ++round) {
    const auto g = axial::testing::random_connected_graph(rng);
    for (const auto& origin : g.spaces()) {
      const auto profile = g.depth_profile(origin);
      for (const auto& [u, v] : g.edges()) {
        CHECK(std::abs(profile.steps.at(u) - profile.steps.at(v)) <= 1);
      }
    }
  }
}

TEST_CASE("adding an edge never deepens anything", "[graph][property]") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 40; ++round) {
    const auto model = axial::testing::random_connected_edges(rng, 3, 10);
    const auto g = build_graph(axial::testing::to_space_edges(model),
                               SpaceId(axial::testing::node_name(0)));

    std::set<std::pair<int, int>> present;
    for (auto [u, v] : model.edges) present.insert(std::minmax(u, v));
    std::vector<std::pair<int, int>> absent;
    for (int u = 0; u < model.node_count; ++u) {
      for (int v = u + 1; v < model.node_count; ++v) {
        if (!present.count({u, v})) absent.emplace_back(u, v);
      }
    }
    if (absent.empty()) continue;
    const auto [nu, nv] = absent[std::uniform_int_distribution<std::size_t>(
        0, absent.size() - 1)(rng)];
    auto extended = model;
    extended.edges.emplace_back(nu, nv);
    const auto g2 = build_graph(axial::testing::to_space_edges(extended),
                                SpaceId(axial::testing::node_name(0)));

    for (const auto& origin : g.spaces()) {
      const auto before = g.depth_profile(origin);
      const auto after = g2.depth_profile(origin);
      for (const auto& [space, steps] : before.steps) {
        CHECK(after.steps.at(space) <= steps);
      }
    }
  }
}

TEST_CASE("mean depth is at least 1, exactly 1 iff adjacent to all", "[graph][property]") {
  std::mt19937 rng(5150);
  for (int round = 0; round < 40; ++round) {
    const auto g = axial::testing::random_connected_graph(rng);
    for (const auto& origin : g.spaces()) {
      const double mean = g.mean_depth(origin);
      CHECK(mean >= 1.0);
      const bool adjacent_to_all = g.neighbors(origin).size() == g.space_count() - 1;
      CHECK((mean == 1.0) == adjacent_to_all);
    }
  }
}
