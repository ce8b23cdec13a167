#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "surfsim/config.hpp"
#include "surfsim/rng.hpp"

namespace surfsim {

struct Message {
  std::uint64_t id = 0;
  int source = 0;
  int ttl_initial = 0;
};

// Hop budget for one dissemination: ceil(2a / R).
int ttl_for(double area_side, double tx_range);

// Static world for one run: node placement, unit-disk adjacency, per-node
// accessible channel sets and the PR population per channel. Immutable after
// construction; safe to share read-only across threads.
struct Topology {
  double area_side = 0.0;
  double tx_range = 0.0;
  int num_channels = 0;
  std::vector<std::array<double, 2>> positions;
  std::vector<std::vector<int>> neighbors;  // sorted ids, symmetric, irreflexive
  std::vector<std::vector<int>> acs;        // per node, sorted channel indices
  std::vector<std::uint32_t> acs_mask;      // bit i set <=> channel i in acs
  std::vector<int> pr_per_channel;
  std::vector<int> cr_n_table;  // nodes x channels, neighbor counts per channel

  int num_nodes() const { return static_cast<int>(positions.size()); }
  bool has_channel(int node, int channel) const {
    return (acs_mask[node] >> channel) & 1u;
  }
  // CR_n: adjacent nodes able to access `channel`.
  int cr_neighbors(int node, int channel) const {
    return cr_n_table[static_cast<std::size_t>(node) * num_channels + channel];
  }
};

// PR nodes are dealt to channels round-robin; counts differ by at most one.
std::vector<int> pr_channel_split(int num_pr_nodes, int num_channels);

// Adjacency from unit-disk positions. Validates acs shape against channels.
Topology build_topology(double area_side, double tx_range, int num_channels,
                        std::vector<std::array<double, 2>> positions,
                        std::vector<std::vector<int>> acs,
                        std::vector<int> pr_per_channel);

// Synthetic worlds with explicit adjacency (tests, small instances).
Topology build_topology_graph(int num_channels, int num_nodes,
                              const std::vector<std::pair<int, int>>& edges,
                              std::vector<std::vector<int>> acs,
                              std::vector<int> pr_per_channel);

// Draw order: positions (x,y per node), then each node's channel subset.
Topology generate_topology(const ScenarioConfig& cfg, Rng& rng);

// Adjacent nodes whose Acs contains `channel`; the node itself excluded.
std::vector<int> neighbors_on_channel(const Topology& topo, int node, int channel);

// Debug dump, one line per node: "id x y acs=[...]".
std::string dump_topology(const Topology& topo);

}  // namespace surfsim
