#include "surfsim/campaign.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "surfsim/dissemination.hpp"
#include "surfsim/topology.hpp"

namespace surfsim {
namespace {

using nlohmann::json;

RunTrace execute_run(const ScenarioConfig& cfg, int run_index, int ttl) {
  Rng rng(Rng::split(cfg.rng_seed, static_cast<std::uint64_t>(run_index)));
  const Topology topo = generate_topology(cfg, rng);
  const StrategyState strategy = make_strategy_state(cfg.strategy, topo, cfg.beta);
  Message msg;
  msg.id = static_cast<std::uint64_t>(run_index);
  msg.source = static_cast<int>(rng.next_below(cfg.num_cr_nodes));
  msg.ttl_initial = ttl;
  return run_dissemination(topo, strategy, cfg, msg, rng);
}

std::string fmt(double v) {
  if (std::isnan(v)) return "na";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json stat_json(const Statistic& s) {
  json j;
  j["mean"] = std::isnan(s.mean) ? json() : json(s.mean);
  j["ci95"] = std::isnan(s.ci95) ? json() : json(s.ci95);
  j["n"] = s.n;
  return j;
}

json indexed_stats(const std::vector<Statistic>& stats, const char* key, int base) {
  json arr = json::array();
  for (std::size_t i = 0; i < stats.size(); ++i) {
    json j = stat_json(stats[i]);
    j[key] = base + static_cast<int>(i);
    arr.push_back(std::move(j));
  }
  return arr;
}

json config_json(const ScenarioConfig& cfg) {
  json j;
  j["num_cr_nodes"] = cfg.num_cr_nodes;
  j["num_pr_nodes"] = cfg.num_pr_nodes;
  j["num_channels"] = cfg.num_channels;
  j["acs_size"] = cfg.acs_size;
  j["total_slots"] = cfg.total_slots;
  j["area_side"] = cfg.area_side;
  j["tx_range"] = cfg.tx_range;
  j["beta"] = cfg.beta;
  j["pr_model"] = to_string(cfg.pr_model);
  j["strategy"] = to_string(cfg.strategy);
  j["num_runs"] = cfg.num_runs;
  j["rng_seed"] = cfg.rng_seed;
  return j;
}

json result_json(const CampaignResult& r) {
  json j;
  j["ttl"] = r.ttl;
  j["num_nodes"] = r.num_nodes;
  j["num_runs"] = r.num_runs;
  j["per_hop_neighbors"] = indexed_stats(r.per_hop_neighbors, "hop", 1);
  j["per_hop_receivers"] = indexed_stats(r.per_hop_receivers, "hop", 1);
  j["per_hop_loss_ratio"] = indexed_stats(r.per_hop_loss_ratio, "hop", 1);
  j["blocking_ratio"] = stat_json(r.blocking_ratio);
  j["delivery"]["network"] = stat_json(r.delivery_network_mean);
  j["delivery"]["per_node"] = indexed_stats(r.delivery_per_node, "node", 0);
  j["accumulative_receivers"] = indexed_stats(r.accumulative_receivers, "hop", 0);
  j["run_stats"]["receivers"] = stat_json(r.receivers_per_run);
  j["run_stats"]["loss_ratio"] = stat_json(r.loss_ratio_per_run);
  j["run_stats"]["transmissions"] = stat_json(r.transmissions_per_run);
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void append_indexed_csv(std::string& out, const std::string& cell,
                        const std::vector<Statistic>& stats, int base) {
  for (std::size_t i = 0; i < stats.size(); ++i) {
    out += cell + ',' + std::to_string(base + static_cast<int>(i)) + ',' +
           fmt(stats[i].mean) + ',' + fmt(stats[i].ci95) + ',' +
           std::to_string(stats[i].n) + '\n';
  }
}

}  // namespace

CampaignResult run_cell(const ScenarioConfig& cfg, int jobs,
                        std::vector<RunTrace>* traces_out) {
  validate_or_throw(cfg);
  const int ttl = ttl_for(cfg.area_side, cfg.tx_range);
  std::vector<RunTrace> traces(cfg.num_runs);

  std::atomic<int> cursor{0};
  auto worker = [&] {
    for (;;) {
      const int r = cursor.fetch_add(1);
      if (r >= cfg.num_runs) break;
      traces[r] = execute_run(cfg, r, ttl);
    }
  };

  const int workers = std::max(1, std::min(jobs, cfg.num_runs));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CampaignResult result = aggregate(traces, ttl, cfg.num_cr_nodes);
  if (traces_out) *traces_out = std::move(traces);
  return result;
}

Preset preset_from_config(const ScenarioConfig& cfg, const std::string& name) {
  Preset p;
  p.name = name;
  p.description = "scenario file";
  PresetCell cell;
  cell.label = "config";
  cell.config = cfg;
  p.cells.push_back(std::move(cell));
  return p;
}

std::string summary_json(const Preset& preset, std::uint64_t campaign_seed,
                         const std::vector<CampaignResult>& results) {
  json root;
  root["preset"] = preset.name;
  root["description"] = preset.description;
  root["seed"] = campaign_seed;
  json cells = json::array();
  for (std::size_t i = 0; i < preset.cells.size(); ++i) {
    json c;
    c["label"] = preset.cells[i].label;
    json axes;
    for (const auto& [k, v] : preset.cells[i].axes) axes[k] = v;
    c["axes"] = std::move(axes);
    c["config"] = config_json(preset.cells[i].config);
    c["result"] = result_json(results[i]);
    cells.push_back(std::move(c));
  }
  root["cells"] = std::move(cells);
  return root.dump(2) + "\n";
}

std::vector<CampaignResult> run_campaign(const Preset& preset,
                                         const CampaignOptions& options,
                                         const std::filesystem::path& out_dir) {
  if (preset.cells.empty()) throw std::runtime_error("preset has no cells");

  // Resolve per-cell configs. Preset cells draw their seeds from the campaign
  // seed by cell index, so beta sweeps use independent topologies per cell; a
  // plain scenario file keeps its own seed (single cell, no split).
  const std::uint64_t campaign_seed =
      options.seed.value_or(preset.cells.front().config.rng_seed);
  const bool single_config_cell =
      preset.cells.size() == 1 && preset.cells.front().label == "config";

  Preset resolved = preset;
  for (std::size_t i = 0; i < resolved.cells.size(); ++i) {
    auto& cfg = resolved.cells[i].config;
    cfg.rng_seed = single_config_cell
                       ? campaign_seed
                       : Rng::split(campaign_seed, static_cast<std::uint64_t>(i));
    if (options.runs) cfg.num_runs = *options.runs;
    validate_or_throw(cfg);
  }

  const auto dir = out_dir / resolved.name;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory " + dir.string() +
                             ": " + ec.message());

  std::vector<CampaignResult> results;
  std::string neighbors_csv = "cell,hop,mean,ci95,n\n";
  std::string receivers_csv = "cell,hop,mean,ci95,n\n";
  std::string loss_csv = "cell,hop,mean,ci95,n\n";
  std::string blocking_csv = "cell,mean,ci95,n\n";
  std::string delivery_csv = "cell,node_id,mean,ci95,n\n";
  std::string network_csv = "cell,mean,ci95,n\n";
  std::string accum_csv = "cell,hop,mean,ci95,n\n";
  std::string run_stats_csv = "cell,stat,mean,ci95,n\n";
  std::string traces_csv = "cell," + trace_csv_header();

  for (const auto& cell : resolved.cells) {
    std::vector<RunTrace> traces;
    CampaignResult r =
        run_cell(cell.config, options.jobs, options.keep_traces ? &traces : nullptr);

    append_indexed_csv(neighbors_csv, cell.label, r.per_hop_neighbors, 1);
    append_indexed_csv(receivers_csv, cell.label, r.per_hop_receivers, 1);
    append_indexed_csv(loss_csv, cell.label, r.per_hop_loss_ratio, 1);
    append_indexed_csv(delivery_csv, cell.label, r.delivery_per_node, 0);
    append_indexed_csv(accum_csv, cell.label, r.accumulative_receivers, 0);
    blocking_csv += cell.label + ',' + fmt(r.blocking_ratio.mean) + ',' +
                    fmt(r.blocking_ratio.ci95) + ',' +
                    std::to_string(r.blocking_ratio.n) + '\n';
    network_csv += cell.label + ',' + fmt(r.delivery_network_mean.mean) + ',' +
                   fmt(r.delivery_network_mean.ci95) + ',' +
                   std::to_string(r.delivery_network_mean.n) + '\n';
    for (const auto& [stat_name, stat] :
         {std::pair<const char*, const Statistic&>{"receivers", r.receivers_per_run},
          {"loss_ratio", r.loss_ratio_per_run},
          {"transmissions", r.transmissions_per_run}}) {
      run_stats_csv += cell.label + ',' + stat_name + ',' + fmt(stat.mean) + ',' +
                       fmt(stat.ci95) + ',' + std::to_string(stat.n) + '\n';
    }
    if (options.keep_traces) {
      std::string block;
      for (std::size_t run = 0; run < traces.size(); ++run)
        append_trace_csv(block, traces[run], static_cast<int>(run));
      // prefix each row with the cell label
      std::size_t pos = 0;
      while (pos < block.size()) {
        const std::size_t end = block.find('\n', pos);
        traces_csv += cell.label + ',' + block.substr(pos, end - pos) + '\n';
        pos = end + 1;
      }
    }
    results.push_back(std::move(r));
  }

  write_file(dir / "per_hop_neighbors.csv", neighbors_csv);
  write_file(dir / "per_hop_receivers.csv", receivers_csv);
  write_file(dir / "per_hop_loss_ratio.csv", loss_csv);
  write_file(dir / "blocking_ratio.csv", blocking_csv);
  write_file(dir / "delivery_ratio.csv", delivery_csv);
  write_file(dir / "delivery_network.csv", network_csv);
  write_file(dir / "accumulative_receivers.csv", accum_csv);
  write_file(dir / "run_stats.csv", run_stats_csv);
  if (options.keep_traces) write_file(dir / "trace.csv", traces_csv);
  write_file(dir / "summary.json", summary_json(resolved, campaign_seed, results));
  return results;
}

}  // namespace surfsim
