#include "surfsim/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace surfsim {

double surf_weight(double pr_occupancy, double cr_occupancy) {
  return std::exp(-pr_occupancy) * cr_occupancy;
}

int surf_select(const std::vector<ChannelView>& views, Rng& rng) {
  if (views.empty()) throw std::invalid_argument("surf_select: no views");

  double best_w = views[0].weight;
  for (const auto& v : views) best_w = std::max(best_w, v.weight);

  double best_pr = 2.0;  // above any valid occupancy
  for (const auto& v : views)
    if (v.weight == best_w) best_pr = std::min(best_pr, v.pr_occupancy);

  int count = 0;
  for (const auto& v : views)
    if (v.weight == best_w && v.pr_occupancy == best_pr) ++count;

  int pick = count > 1 ? static_cast<int>(rng.next_below(count)) : 0;
  for (const auto& v : views) {
    if (v.weight == best_w && v.pr_occupancy == best_pr && pick-- == 0)
      return v.channel;
  }
  return views.back().channel;  // unreachable
}

int rd_select(const std::vector<int>& acs, Rng& rng) {
  if (acs.empty()) throw std::invalid_argument("rd_select: empty channel set");
  return acs[rng.next_below(static_cast<std::uint32_t>(acs.size()))];
}

std::vector<int> compute_ecs(const Topology& topo, int node) {
  if (node < 0 || node >= topo.num_nodes())
    throw std::invalid_argument("compute_ecs: unknown node id");

  // Neighbors sharing no channel with us can never be covered.
  std::vector<int> uncovered;
  for (int nb : topo.neighbors[node])
    if (topo.acs_mask[node] & topo.acs_mask[nb]) uncovered.push_back(nb);

  std::vector<int> ecs;
  std::vector<char> used(topo.acs[node].size(), 0);
  while (!uncovered.empty()) {
    int best_channel = -1;
    std::size_t best_index = 0;
    int best_cover = 0;
    for (std::size_t i = 0; i < topo.acs[node].size(); ++i) {
      if (used[i]) continue;
      const int c = topo.acs[node][i];
      int cover = 0;
      for (int nb : uncovered)
        if (topo.has_channel(nb, c)) ++cover;
      if (cover > best_cover) {  // ties keep the lowest channel index
        best_cover = cover;
        best_channel = c;
        best_index = i;
      }
    }
    if (best_cover == 0) break;
    used[best_index] = 1;
    ecs.push_back(best_channel);
    std::erase_if(uncovered,
                  [&](int nb) { return topo.has_channel(nb, best_channel); });
  }
  return ecs;
}

StrategyState make_strategy_state(StrategyKind kind, const Topology& topo, int beta) {
  StrategyState state;
  state.kind = kind;
  state.beta = beta;
  if (kind == StrategyKind::Sb || kind == StrategyKind::Ca) {
    state.ecs.resize(topo.num_nodes());
    for (int v = 0; v < topo.num_nodes(); ++v) state.ecs[v] = compute_ecs(topo, v);
  }
  return state;
}

namespace {

ChannelDecision as_decision(int channel, Role role) {
  if (role == Role::Transmitter) return ChannelDecision{channel, {}};
  return ChannelDecision{-1, {channel}};
}

}  // namespace

ChannelDecision sb_decide(const StrategyState& state, const Topology& topo,
                          int node, int round, Role role, Rng& rng) {
  const auto& ecs = state.ecs[node];
  if (ecs.empty()) return as_decision(rd_select(topo.acs[node], rng), role);
  return as_decision(ecs[static_cast<std::size_t>(round) % ecs.size()], role);
}

ChannelDecision ca_decide(const StrategyState& state, const Topology& topo,
                          int node, int round, Role role, Rng& rng) {
  if (role == Role::Transmitter) return sb_decide(state, topo, node, round, role, rng);
  const auto& ecs = state.ecs[node];
  if (ecs.empty()) return as_decision(rd_select(topo.acs[node], rng), role);
  ChannelDecision d;
  d.rx_channels = ecs;
  std::sort(d.rx_channels.begin(), d.rx_channels.end());
  return d;
}

ChannelDecision decide(const StrategyState& state, const Topology& topo, int node,
                       const PrActivityState& pr_state, int round, Rng& rng,
                       Role role) {
  switch (state.kind) {
    case StrategyKind::Surf: {
      const auto views = build_channel_views(topo, node, pr_state, state.beta);
      return as_decision(surf_select(views, rng), role);
    }
    case StrategyKind::Rd:
      return as_decision(rd_select(topo.acs[node], rng), role);
    case StrategyKind::Sb:
      return sb_decide(state, topo, node, round, role, rng);
    case StrategyKind::Ca:
      return ca_decide(state, topo, node, round, role, rng);
  }
  throw std::logic_error("decide: unknown strategy");
}

}  // namespace surfsim
