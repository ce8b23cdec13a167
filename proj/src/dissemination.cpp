#include "surfsim/dissemination.hpp"

#include <algorithm>
#include <cstdio>

#include "surfsim/occupancy.hpp"

namespace surfsim {

bool operator==(const Message& a, const Message& b) {
  return a.id == b.id && a.source == b.source && a.ttl_initial == b.ttl_initial;
}

bool RunTrace::operator==(const RunTrace& o) const {
  return message == o.message && num_nodes == o.num_nodes && ttl == o.ttl &&
         transmissions == o.transmissions && first_rx_hop == o.first_rx_hop &&
         total_tx == o.total_tx && total_rx == o.total_rx &&
         total_losses == o.total_losses && blocked_events == o.blocked_events &&
         died_blocked == o.died_blocked;
}

int RunTrace::received_count() const {
  int count = 0;
  for (int h : first_rx_hop) count += (h >= 0);
  return count;
}

double loss_probability(int available_slots, int contenders) {
  if (available_slots < 0) throw std::invalid_argument("loss_probability: tau_a < 0");
  if (contenders < available_slots) return 0.01;
  if (contenders == 0) return 1.0;  // tau_a == 0 and nobody competing; not a loss path
  const double loss =
      1.0 - static_cast<double>(available_slots) / static_cast<double>(contenders);
  return std::clamp(loss, 0.0, 1.0);
}

RunTrace run_dissemination(const Topology& topo, const StrategyState& strategy,
                           const ScenarioConfig& cfg, const Message& msg,
                           Rng& rng) {
  const int n = topo.num_nodes();
  RunTrace trace;
  trace.message = msg;
  trace.num_nodes = n;
  trace.ttl = msg.ttl_initial;
  trace.first_rx_hop.assign(n, -1);
  trace.first_rx_hop[msg.source] = 0;

  std::vector<char> received(n, 0);
  received[msg.source] = 1;
  int received_count = 1;
  std::vector<int> fresh{msg.source};

  PrActivityState pr_state =
      sample_pr_state(cfg.pr_model, topo, cfg.total_slots, rng);
  std::vector<int> tx_channel(n, -1);
  std::vector<std::uint32_t> rx_mask(n, 0);
  std::vector<char> is_fresh(n, 0);

  for (int hop = 1; hop <= msg.ttl_initial && !fresh.empty(); ++hop) {
    resample_pr_slots(pr_state, rng);  // "redo the spectrum sensing"

    // Decisions in node-id order: fresh holders pick a transmit channel,
    // nodes without the message pick where to overhear. Nodes that already
    // forwarded stay idle.
    std::fill(is_fresh.begin(), is_fresh.end(), 0);
    for (int v : fresh) is_fresh[v] = 1;
    const int round = hop - 1;  // cursors start at 0
    for (int v = 0; v < n; ++v) {
      if (is_fresh[v]) {
        tx_channel[v] =
            decide(strategy, topo, v, pr_state, round, rng, Role::Transmitter)
                .tx_channel;
      } else if (!received[v]) {
        rx_mask[v] = 0;
        for (int c :
             decide(strategy, topo, v, pr_state, round, rng, Role::Listener)
                 .rx_channels)
          rx_mask[v] |= 1u << c;
      } else {
        rx_mask[v] = 0;
      }
    }

    // Transmissions in node-id order; a listener leaves the candidate pool
    // the moment it receives, so the first success counts.
    std::vector<int> next_fresh;
    for (int t : fresh) {
      const int ch = tx_channel[t];
      Transmission rec;
      rec.hop = hop;
      rec.tx_node = t;
      rec.channel = ch;
      rec.cr_neighbors = topo.cr_neighbors(t, ch);
      const double loss = loss_probability(
          pr_state.total_slots - pr_state.occupied_slots[ch], rec.cr_neighbors);
      for (int nb : topo.neighbors[t]) {
        if (received[nb] || !((rx_mask[nb] >> ch) & 1u)) continue;
        rec.tuned.push_back(nb);
        if (rng.bernoulli(1.0 - loss)) {
          rec.successes.push_back(nb);
          received[nb] = 1;
          ++received_count;
          trace.first_rx_hop[nb] = hop;
          next_fresh.push_back(nb);
        }
      }
      rec.blocked = rec.tuned.empty() && (msg.ttl_initial - hop) > 0;
      trace.total_tx += 1;
      trace.total_rx += static_cast<int>(rec.successes.size());
      trace.total_losses += static_cast<int>(rec.tuned.size() - rec.successes.size());
      trace.blocked_events += rec.blocked ? 1 : 0;
      trace.transmissions.push_back(std::move(rec));
    }
    std::sort(next_fresh.begin(), next_fresh.end());
    fresh = std::move(next_fresh);
  }

  // The run died from blocking if its last hop had transmitters but not a
  // single tuned listener, with hops still in budget and part of the network
  // unreached. A message that already covered everyone is complete, not
  // blocked; a last-hop fizzle is a TTL death.
  if (!trace.transmissions.empty() && received_count < n) {
    const int last_hop = trace.transmissions.back().hop;
    if (last_hop < msg.ttl_initial) {
      bool all_unheard = true;
      for (auto it = trace.transmissions.rbegin();
           it != trace.transmissions.rend() && it->hop == last_hop; ++it)
        all_unheard = all_unheard && it->tuned.empty();
      trace.died_blocked = all_unheard;
    }
  }
  return trace;
}

std::string trace_csv_header() {
  return "run,hop,tx_node,channel,cr_n,tuned,successes,losses,blocked\n";
}

void append_trace_csv(std::string& out, const RunTrace& trace, int run_index) {
  char buf[160];
  for (const auto& t : trace.transmissions) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%d,%zu,%zu,%zu,%d\n", run_index,
                  t.hop, t.tx_node, t.channel, t.cr_neighbors, t.tuned.size(),
                  t.successes.size(), t.tuned.size() - t.successes.size(),
                  t.blocked ? 1 : 0);
    out += buf;
  }
}

}  // namespace surfsim
