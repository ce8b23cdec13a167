#include "surfsim/occupancy.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "surfsim/strategy.hpp"

namespace surfsim {

double pr_occupancy(int occupied_slots, int total_slots) {
  if (total_slots < 1) throw std::invalid_argument("pr_occupancy: total_slots < 1");
  if (occupied_slots < 0 || occupied_slots > total_slots)
    throw std::invalid_argument("pr_occupancy: occupied slots out of [0, total]");
  return static_cast<double>(occupied_slots) / static_cast<double>(total_slots);
}

double cr_occupancy(double available_space, int cr_neighbors, int beta) {
  if (beta < 1) throw std::invalid_argument("cr_occupancy: beta < 1");
  if (cr_neighbors < 0) throw std::invalid_argument("cr_occupancy: negative CR_n");
  if (cr_neighbors < beta) return available_space / static_cast<double>(beta - cr_neighbors);
  if (cr_neighbors == beta) return available_space;
  return available_space / static_cast<double>(cr_neighbors);
}

PrActivityState sample_pr_state(const PrModel& model, const Topology& topo,
                                int total_slots, Rng& rng) {
  PrActivityState state;
  state.total_slots = total_slots;
  state.occupied_slots.assign(topo.num_channels, 0);

  int num_pr = 0;
  for (int c : topo.pr_per_channel) num_pr += c;
  state.pr_channel.resize(num_pr);
  for (int j = 0; j < num_pr; ++j) state.pr_channel[j] = j % topo.num_channels;

  if (model.mode == PrMode::FixedSlots) {
    state.fixed = true;
    state.fixed_slots = std::min(model.fixed_slots, total_slots);
    for (auto& s : state.occupied_slots) s = state.fixed_slots;
  } else {
    state.fixed = false;
    state.on_probability.resize(num_pr);
    for (auto& p : state.on_probability) p = rng.uniform(0.20, 0.80);
    resample_pr_slots(state, rng);
  }
  return state;
}

void resample_pr_slots(PrActivityState& state, Rng& rng) {
  if (state.fixed) return;
  std::fill(state.occupied_slots.begin(), state.occupied_slots.end(), 0);
  for (std::size_t j = 0; j < state.on_probability.size(); ++j)
    if (rng.bernoulli(state.on_probability[j]))
      state.occupied_slots[state.pr_channel[j]] += 1;
  for (auto& s : state.occupied_slots) s = std::min(s, state.total_slots);
}

std::vector<ChannelView> build_channel_views(const Topology& topo, int node,
                                             const PrActivityState& state,
                                             int beta) {
  if (node < 0 || node >= topo.num_nodes())
    throw std::invalid_argument("build_channel_views: unknown node id");
  std::vector<ChannelView> views;
  views.reserve(topo.acs[node].size());
  for (int c : topo.acs[node]) {
    ChannelView v;
    v.channel = c;
    v.pr_occupancy = pr_occupancy(state.occupied_slots[c], state.total_slots);
    v.available_space = 1.0 - v.pr_occupancy;
    v.available_slots = state.total_slots - state.occupied_slots[c];
    v.cr_neighbors = topo.cr_neighbors(node, c);
    v.cr_occupancy = cr_occupancy(v.available_space, v.cr_neighbors, beta);
    v.weight = surf_weight(v.pr_occupancy, v.cr_occupancy);
    views.push_back(v);
  }
  return views;
}

std::string dump_channel_views(const Topology& topo, const PrActivityState& state,
                               int beta) {
  std::string out = "node,channel,pr_o,cr_as,cr_n,cr_o,p_w\n";
  char buf[160];
  for (int v = 0; v < topo.num_nodes(); ++v) {
    for (const auto& view : build_channel_views(topo, v, state, beta)) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%.9g,%.9g,%d,%.9g,%.9g\n", v,
                    view.channel, view.pr_occupancy, view.available_space,
                    view.cr_neighbors, view.cr_occupancy, view.weight);
      out += buf;
    }
  }
  return out;
}

}  // namespace surfsim
