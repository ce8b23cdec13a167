#pragma once

#include <vector>

#include "surfsim/config.hpp"
#include "surfsim/occupancy.hpp"
#include "surfsim/rng.hpp"
#include "surfsim/topology.hpp"

namespace surfsim {

enum class Role { Transmitter, Listener };

// What a node does this round. tx_channel is -1 for listeners; rx_channels is
// empty for transmitters, a singleton for SURF/RD/SB listeners and the whole
// ECS for CA listeners. All channels lie in the deciding node's Acs.
struct ChannelDecision {
  int tx_channel = -1;
  std::vector<int> rx_channels;

  bool operator==(const ChannelDecision&) const = default;
};

// P_w = exp(-PR_o) * CR_o.
double surf_weight(double pr_occupancy, double cr_occupancy);

// Argmax of weight; ties broken by lower PR occupancy, then uniformly at
// random. Throws on empty views.
int surf_select(const std::vector<ChannelView>& views, Rng& rng);

// Uniform over the node's Acs. Throws on empty set.
int rd_select(const std::vector<int>& acs, Rng& rng);

// Essential Channel Set: greedy cover of the node's geographic neighbors by
// channels in its Acs (a neighbor is covered by a channel it can access).
// Ties pick the lowest channel index; neighbors sharing no channel with the
// node are uncoverable and ignored. Returned in selection order.
std::vector<int> compute_ecs(const Topology& topo, int node);

// Per-run strategy state. ECS lists are precomputed for SB/CA; cursors are a
// pure function of the round index (every node advances each round).
struct StrategyState {
  StrategyKind kind = StrategyKind::Surf;
  int beta = 1;
  std::vector<std::vector<int>> ecs;  // SB/CA only
};

StrategyState make_strategy_state(StrategyKind kind, const Topology& topo, int beta);

// SB: transmit on own ECS[round mod |ECS|]; listen on the same rule over the
// listener's own ECS. Sender and receiver cursors are independent, which is
// exactly the desynchronization failure mode of the strategy.
ChannelDecision sb_decide(const StrategyState& state, const Topology& topo,
                          int node, int round, Role role, Rng& rng);

// CA: transmit like SB; listen on the entire own ECS at once.
ChannelDecision ca_decide(const StrategyState& state, const Topology& topo,
                          int node, int round, Role role, Rng& rng);

// Strategy dispatch. SURF transmitters and listeners both run surf_select
// over their own local views; empty-ECS nodes fall back to random selection.
ChannelDecision decide(const StrategyState& state, const Topology& topo, int node,
                       const PrActivityState& pr_state, int round, Rng& rng,
                       Role role);

}  // namespace surfsim
