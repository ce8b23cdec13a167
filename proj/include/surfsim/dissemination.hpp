#pragma once

#include <cstdint>
#include <vector>

#include "surfsim/config.hpp"
#include "surfsim/rng.hpp"
#include "surfsim/strategy.hpp"
#include "surfsim/topology.hpp"

namespace surfsim {

// One broadcast by one node. `tuned` holds the neighbors that were listening
// on the chosen channel and had not yet received the message; `successes` is
// the subset whose reception trial passed (tuned = successes + losses).
struct Transmission {
  int hop = 0;  // 1-based
  int tx_node = 0;
  int channel = 0;
  int cr_neighbors = 0;  // CR_n at the transmitter on that channel
  std::vector<int> tuned;
  std::vector<int> successes;
  bool blocked = false;  // nobody tuned while the message still had hops left

  bool operator==(const Transmission&) const = default;
};

// Full record of one dissemination.
struct RunTrace {
  Message message;
  int num_nodes = 0;
  int ttl = 0;
  std::vector<Transmission> transmissions;  // ordered by (hop, tx_node)
  std::vector<int> first_rx_hop;            // per node; -1 never, 0 source
  int total_tx = 0;
  int total_rx = 0;
  int total_losses = 0;
  int blocked_events = 0;
  // The dissemination died at a hop where every transmitter had zero tuned
  // listeners, with TTL left and unreached nodes remaining.
  bool died_blocked = false;

  int received_count() const;

  bool operator==(const RunTrace&) const;
};

bool operator==(const Message& a, const Message& b);

// Loss model per transmission: 1% floor when contention is below the
// available slots, otherwise 1 - tau_a/CR_n clamped to [0,1].
double loss_probability(int available_slots, int contenders);

// One TTL-bounded round-based dissemination. Per hop: resample PR state,
// fresh holders transmit once (forward-once), non-holders listen, reception
// trials run per tuned listener, transmitters in node-id order. No
// retransmissions. Deterministic given (inputs, rng stream).
RunTrace run_dissemination(const Topology& topo, const StrategyState& strategy,
                           const ScenarioConfig& cfg, const Message& msg,
                           Rng& rng);

// Debug CSV rows: run,hop,tx_node,channel,cr_n,tuned,successes,losses,blocked.
std::string trace_csv_header();
void append_trace_csv(std::string& out, const RunTrace& trace, int run_index);

}  // namespace surfsim
