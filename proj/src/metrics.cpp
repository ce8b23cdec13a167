#include "surfsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

namespace surfsim {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<Statistic> collect(std::vector<std::vector<double>>& per_slot) {
  std::vector<Statistic> out;
  out.reserve(per_slot.size());
  for (auto& samples : per_slot) out.push_back(ci95(std::move(samples)));
  return out;
}

}  // namespace

Statistic ci95(std::vector<double> samples) {
  Statistic s;
  s.n = static_cast<std::int64_t>(samples.size());
  if (samples.empty()) {
    s.mean = kNaN;
    s.ci95 = kNaN;
    return s;
  }
  // Sorted summation makes the result independent of sample order.
  std::sort(samples.begin(), samples.end());
  double sum = 0.0;
  for (double x : samples) sum += x;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n < 2) {
    s.ci95 = kNaN;
    return s;
  }
  double ss = 0.0;
  for (double x : samples) ss += (x - s.mean) * (x - s.mean);
  const double var = ss / static_cast<double>(s.n - 1);
  const boost::math::students_t dist(static_cast<double>(s.n - 1));
  const double t = boost::math::quantile(dist, 0.975);
  s.ci95 = t * std::sqrt(var / static_cast<double>(s.n));
  return s;
}

std::vector<Statistic> per_hop_neighbors(const std::vector<RunTrace>& traces, int ttl) {
  // Per run and hop: mean CR_n over that hop's transmissions. Hops without
  // transmissions contribute no sample.
  std::vector<std::vector<double>> samples(ttl);
  std::vector<double> sum(ttl);
  std::vector<int> count(ttl);
  for (const auto& trace : traces) {
    std::fill(sum.begin(), sum.end(), 0.0);
    std::fill(count.begin(), count.end(), 0);
    for (const auto& t : trace.transmissions) {
      sum[t.hop - 1] += t.cr_neighbors;
      count[t.hop - 1] += 1;
    }
    for (int h = 0; h < ttl; ++h)
      if (count[h] > 0) samples[h].push_back(sum[h] / count[h]);
  }
  return collect(samples);
}

std::vector<Statistic> per_hop_receivers(const std::vector<RunTrace>& traces, int ttl) {
  // Every run contributes every hop; hops after the dissemination died count
  // as zero receivers.
  std::vector<std::vector<double>> samples(ttl);
  std::vector<double> succ(ttl);
  for (const auto& trace : traces) {
    std::fill(succ.begin(), succ.end(), 0.0);
    for (const auto& t : trace.transmissions)
      succ[t.hop - 1] += static_cast<double>(t.successes.size());
    for (int h = 0; h < ttl; ++h) samples[h].push_back(succ[h]);
  }
  return collect(samples);
}

std::vector<Statistic> per_hop_loss_ratio(const std::vector<RunTrace>& traces, int ttl) {
  // Losses over tuned listeners; hops with nobody tuned contribute no sample
  // (that is the blocking path, not the loss path).
  std::vector<std::vector<double>> samples(ttl);
  std::vector<double> tuned(ttl), lost(ttl);
  for (const auto& trace : traces) {
    std::fill(tuned.begin(), tuned.end(), 0.0);
    std::fill(lost.begin(), lost.end(), 0.0);
    for (const auto& t : trace.transmissions) {
      tuned[t.hop - 1] += static_cast<double>(t.tuned.size());
      lost[t.hop - 1] += static_cast<double>(t.tuned.size() - t.successes.size());
    }
    for (int h = 0; h < ttl; ++h)
      if (tuned[h] > 0) samples[h].push_back(lost[h] / tuned[h]);
  }
  return collect(samples);
}

Statistic blocking_ratio(const std::vector<RunTrace>& traces) {
  std::vector<double> samples;
  samples.reserve(traces.size());
  for (const auto& trace : traces) samples.push_back(trace.died_blocked ? 1.0 : 0.0);
  return ci95(std::move(samples));
}

std::vector<Statistic> delivery_ratio(const std::vector<RunTrace>& traces, int num_nodes) {
  // Fraction of runs in which each node held the message; a node is credited
  // in runs where it was the source.
  std::vector<std::vector<double>> samples(num_nodes);
  for (const auto& trace : traces)
    for (int v = 0; v < num_nodes; ++v)
      samples[v].push_back(trace.first_rx_hop[v] >= 0 ? 1.0 : 0.0);
  return collect(samples);
}

std::vector<Statistic> accumulative_receivers(const std::vector<RunTrace>& traces, int ttl) {
  // Distinct holders by end of hop h; the source counts from hop 0.
  std::vector<std::vector<double>> samples(ttl + 1);
  std::vector<double> cumulative(ttl + 1);
  for (const auto& trace : traces) {
    std::fill(cumulative.begin(), cumulative.end(), 0.0);
    for (int h : trace.first_rx_hop)
      if (h >= 0) cumulative[h] += 1.0;
    for (int h = 1; h <= ttl; ++h) cumulative[h] += cumulative[h - 1];
    for (int h = 0; h <= ttl; ++h) samples[h].push_back(cumulative[h]);
  }
  return collect(samples);
}

CampaignResult aggregate(const std::vector<RunTrace>& traces, int ttl, int num_nodes) {
  CampaignResult r;
  r.ttl = ttl;
  r.num_nodes = num_nodes;
  r.num_runs = static_cast<std::int64_t>(traces.size());
  r.per_hop_neighbors = per_hop_neighbors(traces, ttl);
  r.per_hop_receivers = per_hop_receivers(traces, ttl);
  r.per_hop_loss_ratio = per_hop_loss_ratio(traces, ttl);
  r.blocking_ratio = blocking_ratio(traces);
  r.delivery_per_node = delivery_ratio(traces, num_nodes);
  r.accumulative_receivers = accumulative_receivers(traces, ttl);

  std::vector<double> fraction, receivers, loss, tx;
  for (const auto& trace : traces) {
    fraction.push_back(static_cast<double>(trace.received_count()) / num_nodes);
    receivers.push_back(static_cast<double>(trace.total_rx));
    tx.push_back(static_cast<double>(trace.total_tx));
    const int trials = trace.total_rx + trace.total_losses;
    if (trials > 0)
      loss.push_back(static_cast<double>(trace.total_losses) / trials);
  }
  r.delivery_network_mean = ci95(std::move(fraction));
  r.receivers_per_run = ci95(std::move(receivers));
  r.loss_ratio_per_run = ci95(std::move(loss));
  r.transmissions_per_run = ci95(std::move(tx));
  return r;
}

}  // namespace surfsim
