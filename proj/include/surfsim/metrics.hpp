#pragma once

#include <cstdint>
#include <vector>

#include "surfsim/dissemination.hpp"

namespace surfsim {

// Sample mean with a two-sided 95% Student-t half-width. ci95_halfwidth is
// NaN when fewer than two samples are available.
struct Statistic {
  double mean = 0.0;
  double ci95 = 0.0;
  std::int64_t n = 0;
};

// Computes mean and t-interval half-width. Samples are summed in sorted
// order, so the result is invariant under permutation of the input.
Statistic ci95(std::vector<double> samples);

// The aggregated evaluation quantities for one campaign cell.
struct CampaignResult {
  int ttl = 0;
  int num_nodes = 0;
  std::int64_t num_runs = 0;

  // Index hop-1, hops 1..TTL. A run samples hop h only if it transmitted
  // there (neighbors) or had tuned listeners there (loss ratio); receivers
  // count zeros for hops after the dissemination died.
  std::vector<Statistic> per_hop_neighbors;
  std::vector<Statistic> per_hop_receivers;
  std::vector<Statistic> per_hop_loss_ratio;

  Statistic blocking_ratio;  // fraction of runs that died from blocking

  std::vector<Statistic> delivery_per_node;  // per node id, over runs
  Statistic delivery_network_mean;           // per-run received fraction

  std::vector<Statistic> accumulative_receivers;  // index hop, 0..TTL

  // Per-run scalars: totals across the whole run.
  Statistic receivers_per_run;
  Statistic loss_ratio_per_run;
  Statistic transmissions_per_run;
};

std::vector<Statistic> per_hop_neighbors(const std::vector<RunTrace>& traces, int ttl);
std::vector<Statistic> per_hop_receivers(const std::vector<RunTrace>& traces, int ttl);
std::vector<Statistic> per_hop_loss_ratio(const std::vector<RunTrace>& traces, int ttl);
Statistic blocking_ratio(const std::vector<RunTrace>& traces);
std::vector<Statistic> delivery_ratio(const std::vector<RunTrace>& traces, int num_nodes);
std::vector<Statistic> accumulative_receivers(const std::vector<RunTrace>& traces, int ttl);

CampaignResult aggregate(const std::vector<RunTrace>& traces, int ttl, int num_nodes);

}  // namespace surfsim
