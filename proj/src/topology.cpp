#include "surfsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace surfsim {

int ttl_for(double area_side, double tx_range) {
  if (!(area_side > 0.0) || !(tx_range > 0.0))
    throw std::invalid_argument("ttl_for: dimensions must be positive");
  return static_cast<int>(std::ceil(2.0 * area_side / tx_range));
}

std::vector<int> pr_channel_split(int num_pr_nodes, int num_channels) {
  if (num_channels < 1) throw std::invalid_argument("pr_channel_split: no channels");
  std::vector<int> counts(num_channels, 0);
  for (int j = 0; j < num_pr_nodes; ++j) counts[j % num_channels] += 1;
  return counts;
}

namespace {

// Shared finishing step: sorts/validates acs, fills masks and the CR_n table.
void finalize(Topology& topo, std::vector<std::vector<int>> acs,
              std::vector<int> pr_per_channel) {
  const int n = topo.num_nodes();
  const int channels = topo.num_channels;

  if (static_cast<int>(acs.size()) != n)
    throw std::invalid_argument("topology: acs size mismatch");
  if (static_cast<int>(pr_per_channel.size()) != channels)
    throw std::invalid_argument("topology: pr_per_channel size mismatch");

  topo.acs = std::move(acs);
  topo.acs_mask.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    auto& set = topo.acs[v];
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw std::invalid_argument("topology: duplicate channel in acs");
    for (int c : set) {
      if (c < 0 || c >= channels)
        throw std::invalid_argument("topology: channel index out of range");
      topo.acs_mask[v] |= 1u << c;
    }
  }
  topo.pr_per_channel = std::move(pr_per_channel);

  topo.cr_n_table.assign(static_cast<std::size_t>(n) * channels, 0);
  for (int v = 0; v < n; ++v) {
    for (int nb : topo.neighbors[v])
      for (int c : topo.acs[nb])
        topo.cr_n_table[static_cast<std::size_t>(v) * channels + c] += 1;
  }
}

}  // namespace

Topology build_topology(double area_side, double tx_range, int num_channels,
                        std::vector<std::array<double, 2>> positions,
                        std::vector<std::vector<int>> acs,
                        std::vector<int> pr_per_channel) {
  Topology topo;
  topo.area_side = area_side;
  topo.tx_range = tx_range;
  topo.num_channels = num_channels;
  topo.positions = std::move(positions);

  const int n = topo.num_nodes();
  topo.neighbors.assign(n, {});
  const double r2 = tx_range * tx_range;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double dx = topo.positions[u][0] - topo.positions[v][0];
      const double dy = topo.positions[u][1] - topo.positions[v][1];
      if (dx * dx + dy * dy <= r2) {
        topo.neighbors[u].push_back(v);
        topo.neighbors[v].push_back(u);
      }
    }
  }
  finalize(topo, std::move(acs), std::move(pr_per_channel));
  return topo;
}

Topology build_topology_graph(int num_channels, int num_nodes,
                              const std::vector<std::pair<int, int>>& edges,
                              std::vector<std::vector<int>> acs,
                              std::vector<int> pr_per_channel) {
  Topology topo;
  topo.area_side = 1.0;
  topo.tx_range = 1.0;
  topo.num_channels = num_channels;
  topo.positions.assign(num_nodes, {0.0, 0.0});
  topo.neighbors.assign(num_nodes, {});
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= num_nodes || v >= num_nodes)
      throw std::invalid_argument("topology: bad edge");
    topo.neighbors[u].push_back(v);
    topo.neighbors[v].push_back(u);
  }
  for (auto& list : topo.neighbors) std::sort(list.begin(), list.end());
  finalize(topo, std::move(acs), std::move(pr_per_channel));
  return topo;
}

Topology generate_topology(const ScenarioConfig& cfg, Rng& rng) {
  std::vector<std::array<double, 2>> positions(cfg.num_cr_nodes);
  for (auto& p : positions) {
    p[0] = rng.uniform(0.0, cfg.area_side);
    p[1] = rng.uniform(0.0, cfg.area_side);
  }
  std::vector<std::vector<int>> acs(cfg.num_cr_nodes);
  for (auto& set : acs) set = sample_distinct(rng, cfg.acs_size, cfg.num_channels);

  return build_topology(cfg.area_side, cfg.tx_range, cfg.num_channels,
                        std::move(positions), std::move(acs),
                        pr_channel_split(cfg.num_pr_nodes, cfg.num_channels));
}

std::vector<int> neighbors_on_channel(const Topology& topo, int node, int channel) {
  if (node < 0 || node >= topo.num_nodes())
    throw std::invalid_argument("neighbors_on_channel: unknown node id");
  if (channel < 0 || channel >= topo.num_channels)
    throw std::invalid_argument("neighbors_on_channel: channel out of range");
  std::vector<int> out;
  for (int nb : topo.neighbors[node])
    if (topo.has_channel(nb, channel)) out.push_back(nb);
  return out;
}

std::string dump_topology(const Topology& topo) {
  std::string out;
  char buf[128];
  for (int v = 0; v < topo.num_nodes(); ++v) {
    std::snprintf(buf, sizeof(buf), "%d %.6f %.6f acs=[", v, topo.positions[v][0],
                  topo.positions[v][1]);
    out += buf;
    for (std::size_t i = 0; i < topo.acs[v].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(topo.acs[v][i]);
    }
    out += "]\n";
  }
  return out;
}

}  // namespace surfsim
