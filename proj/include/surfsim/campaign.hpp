#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "surfsim/config.hpp"
#include "surfsim/metrics.hpp"
#include "surfsim/presets.hpp"

namespace surfsim {

struct CampaignOptions {
  int jobs = 1;
  std::optional<std::uint64_t> seed;  // overrides the preset/config seed
  std::optional<int> runs;            // overrides num_runs
  bool keep_traces = false;           // also write trace.csv per cell
};

// Executes cfg.num_runs independent runs (topology regenerated per run, run
// seeds split from cfg.rng_seed) and aggregates them. Output is identical for
// any jobs value. Optionally hands back the raw traces.
CampaignResult run_cell(const ScenarioConfig& cfg, int jobs,
                        std::vector<RunTrace>* traces_out = nullptr);

// Runs every cell of the preset and writes <out_dir>/<preset.name>/: one CSV
// per metric (cells stacked in a `cell` column) plus summary.json. Cell seeds
// are split from the campaign seed by cell index. Returns the results in cell
// order.
std::vector<CampaignResult> run_campaign(const Preset& preset,
                                         const CampaignOptions& options,
                                         const std::filesystem::path& out_dir);

// A scenario file behaves as a single-cell preset named after the file stem;
// its rng_seed is used directly as the cell seed.
Preset preset_from_config(const ScenarioConfig& cfg, const std::string& name);

std::string summary_json(const Preset& preset, std::uint64_t campaign_seed,
                         const std::vector<CampaignResult>& results);

}  // namespace surfsim
