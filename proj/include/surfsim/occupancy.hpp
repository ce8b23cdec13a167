#pragma once

#include <vector>

#include "surfsim/config.hpp"
#include "surfsim/rng.hpp"
#include "surfsim/topology.hpp"

namespace surfsim {

// One node's local view of one channel in its Acs.
struct ChannelView {
  int channel = 0;
  double pr_occupancy = 0.0;     // PR_o, occupied slots / total slots
  double available_space = 0.0;  // CR_as = 1 - PR_o
  int available_slots = 0;       // tau_a = tau_t - tau_o
  int cr_neighbors = 0;          // CR_n
  double cr_occupancy = 0.0;     // CR_o, tenancy-weighted
  double weight = 0.0;           // P_w
};

// Ground-truth PR activity. Fixed mode keeps a constant slot count per
// channel for the whole run; dynamic mode redraws ON/OFF per PR at every hop
// (each PR's probability is drawn once per run, uniform in [0.20, 0.80]).
struct PrActivityState {
  int total_slots = 0;
  bool fixed = true;
  int fixed_slots = 0;
  std::vector<double> on_probability;  // per PR node; empty in fixed mode
  std::vector<int> pr_channel;         // channel of each PR node (round-robin)
  std::vector<int> occupied_slots;     // per channel tau_o, always <= total_slots
};

// occupied_slots / total_slots. Throws if occupied > total.
double pr_occupancy(int occupied_slots, int total_slots);

// Piecewise tenancy rule:
//   CR_n < beta  -> CR_as / (beta - CR_n)
//   CR_n == beta -> CR_as
//   CR_n > beta  -> CR_as / CR_n
double cr_occupancy(double available_space, int cr_neighbors, int beta);

PrActivityState sample_pr_state(const PrModel& model, const Topology& topo,
                                int total_slots, Rng& rng);

// Redraws tau_o per channel (dynamic mode); no-op for fixed mode.
void resample_pr_slots(PrActivityState& state, Rng& rng);

// One fully populated view per channel in the node's Acs, weight included.
std::vector<ChannelView> build_channel_views(const Topology& topo, int node,
                                             const PrActivityState& state,
                                             int beta);

// Debug CSV: node,channel,pr_o,cr_as,cr_n,cr_o,p_w (one row per view).
std::string dump_channel_views(const Topology& topo, const PrActivityState& state,
                               int beta);

}  // namespace surfsim
