#include "doctest.h"
#include "surfsim/topology.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

using namespace surfsim;

namespace {

ScenarioConfig paper_cfg() {
  ScenarioConfig cfg;  // defaults are the paper scenario at Ch=5
  return cfg;
}

}  // namespace

TEST_CASE("ttl is the ceiling of twice the area side over the range") {
  CHECK(ttl_for(707.0, 250.0) == 6);
  CHECK(ttl_for(125.0, 250.0) == 1);
  CHECK(ttl_for(500.0, 250.0) == 4);
  CHECK_THROWS_AS(ttl_for(0.0, 250.0), std::invalid_argument);
}

TEST_CASE("PR nodes split round-robin across channels") {
  CHECK(pr_channel_split(30, 5) == std::vector<int>{6, 6, 6, 6, 6});
  CHECK(pr_channel_split(30, 15) == std::vector<int>(15, 2));
  CHECK(pr_channel_split(31, 5) == std::vector<int>{7, 6, 6, 6, 6});
  CHECK(pr_channel_split(0, 3) == std::vector<int>{0, 0, 0});
}

TEST_CASE("two nodes at distance zero are adjacent") {
  auto topo = build_topology(707.0, 250.0, 5, {{10.0, 10.0}, {10.0, 10.0}},
                             {{0, 1, 2}, {0, 1, 2}}, pr_channel_split(30, 5));
  REQUIRE(topo.num_nodes() == 2);
  CHECK(topo.neighbors[0] == std::vector<int>{1});
  CHECK(topo.neighbors[1] == std::vector<int>{0});
}

TEST_CASE("generated topology invariants hold across seeds") {
  const auto cfg = paper_cfg();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(Rng::split(99, seed));
    const auto topo = generate_topology(cfg, rng);
    REQUIRE(topo.num_nodes() == cfg.num_cr_nodes);

    for (int v = 0; v < topo.num_nodes(); ++v) {
      // acs has exactly acs_size distinct channels below num_channels
      REQUIRE(static_cast<int>(topo.acs[v].size()) == cfg.acs_size);
      CHECK(std::adjacent_find(topo.acs[v].begin(), topo.acs[v].end()) ==
            topo.acs[v].end());
      for (int c : topo.acs[v]) CHECK(c < cfg.num_channels);

      // adjacency symmetric and irreflexive
      for (int nb : topo.neighbors[v]) {
        CHECK(nb != v);
        const auto& back = topo.neighbors[nb];
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
      // positions inside the square
      CHECK(topo.positions[v][0] >= 0.0);
      CHECK(topo.positions[v][0] <= cfg.area_side);
    }
    int pr_total = 0;
    for (int c : topo.pr_per_channel) pr_total += c;
    CHECK(pr_total == cfg.num_pr_nodes);
  }
}

TEST_CASE("mean degree with paper parameters lands near 20") {
  // Uniform placement in a 707 m square with a 250 m disk gives an expected
  // degree of 69 * F(250/707) ~ 19.5 after border truncation; accept [18,22]
  // and record the measurement.
  const auto cfg = paper_cfg();
  double degree_sum = 0.0;
  long node_count = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    Rng rng(Rng::split(2024, seed));
    const auto topo = generate_topology(cfg, rng);
    for (int v = 0; v < topo.num_nodes(); ++v)
      degree_sum += static_cast<double>(topo.neighbors[v].size());
    node_count += topo.num_nodes();
  }
  const double mean_degree = degree_sum / static_cast<double>(node_count);
  std::printf("measured mean degree over 10000 topologies: %.4f\n", mean_degree);
  CHECK(mean_degree >= 18.0);
  CHECK(mean_degree <= 22.0);
}

TEST_CASE("neighbors_on_channel") {
  SUBCASE("isolated node has none") {
    auto topo = build_topology(1000.0, 10.0, 3, {{0.0, 0.0}, {900.0, 900.0}},
                               {{0}, {0}}, pr_channel_split(3, 3));
    CHECK(neighbors_on_channel(topo, 0, 0).empty());
  }
  SUBCASE("complete 3-node graph on one shared channel") {
    auto topo = build_topology(100.0, 200.0, 1,
                               {{0.0, 0.0}, {10.0, 0.0}, {0.0, 10.0}},
                               {{0}, {0}, {0}}, {3});
    for (int v = 0; v < 3; ++v) {
      CHECK(neighbors_on_channel(topo, v, 0).size() == 2);
      CHECK(topo.cr_neighbors(v, 0) == 2);
    }
  }
  SUBCASE("with Acs = C every channel sees the same neighbor count") {
    ScenarioConfig cfg = paper_cfg();
    cfg.acs_size = cfg.num_channels;
    Rng rng(7);
    const auto topo = generate_topology(cfg, rng);
    for (int v = 0; v < topo.num_nodes(); ++v)
      for (int c = 1; c < cfg.num_channels; ++c)
        CHECK(topo.cr_neighbors(v, c) == topo.cr_neighbors(v, 0));
  }
  SUBCASE("subset of the geographic neighborhood") {
    ScenarioConfig cfg = paper_cfg();
    Rng rng(13);
    const auto topo = generate_topology(cfg, rng);
    for (int v = 0; v < topo.num_nodes(); ++v) {
      for (int c = 0; c < cfg.num_channels; ++c) {
        for (int nb : neighbors_on_channel(topo, v, c)) {
          const auto& geo = topo.neighbors[v];
          CHECK(std::binary_search(geo.begin(), geo.end(), nb));
        }
      }
    }
  }
  SUBCASE("unknown node id is a usage error") {
    auto topo = build_topology(100.0, 10.0, 1, {{0.0, 0.0}}, {{0}}, {1});
    CHECK_THROWS_AS(neighbors_on_channel(topo, 5, 0), std::invalid_argument);
  }
}

TEST_CASE("topology dump lists one line per node") {
  auto topo = build_topology(100.0, 50.0, 4, {{1.0, 2.0}, {3.0, 4.0}},
                             {{0, 2}, {1, 3}}, pr_channel_split(4, 4));
  const auto dump = dump_topology(topo);
  CHECK(dump.find("0 1.000000 2.000000 acs=[0,2]") != std::string::npos);
  CHECK(dump.find("1 3.000000 4.000000 acs=[1,3]") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 2);
}
