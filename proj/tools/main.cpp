// surfsim command line: preset campaigns, scenario-file runs and debug dumps.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "surfsim/campaign.hpp"
#include "surfsim/config.hpp"
#include "surfsim/occupancy.hpp"
#include "surfsim/presets.hpp"
#include "surfsim/topology.hpp"

namespace {

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surfsim - multi-hop cognitive-radio dissemination simulator"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list-presets", "List built-in experiment presets");

  std::string preset_name, config_path, out_dir = "results";
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  int jobs = default_jobs();
  bool keep_traces = false;

  auto* run = app.add_subcommand("run", "Run a preset or a scenario file");
  auto* preset_opt = run->add_option("--preset", preset_name, "Preset name");
  auto* config_opt = run->add_option("--config", config_path, "Scenario file (key=value)");
  preset_opt->excludes(config_opt);
  run->add_option("--seed", seed, "Campaign seed (overrides preset/config)");
  run->add_option("--runs", runs, "Runs per cell (overrides preset/config)");
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  run->add_flag("--traces", keep_traces, "Also write per-transmission trace.csv");

  std::uint64_t dump_seed = 1;
  std::string dump_config;
  auto* dump_topo = app.add_subcommand("dump-topology",
                                       "Print the generated world of run 0");
  dump_topo->add_option("--seed", dump_seed, "Cell seed")->capture_default_str();
  dump_topo->add_option("--config", dump_config, "Scenario file (default: paper Ch=5)");

  auto* dump_views = app.add_subcommand(
      "dump-views", "Print per-node channel views (CSV) for run 0's initial PR state");
  dump_views->add_option("--seed", dump_seed, "Cell seed")->capture_default_str();
  dump_views->add_option("--config", dump_config, "Scenario file (default: paper Ch=5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& p : surfsim::presets()) {
        std::printf("%-24s %3zu cells  %s\n", p.name.c_str(), p.cells.size(),
                    p.description.c_str());
      }
      return 0;
    }

    if (run->parsed()) {
      surfsim::Preset preset;
      if (!preset_name.empty()) {
        const auto* p = surfsim::find_preset(preset_name);
        if (!p) {
          std::cerr << "unknown preset '" << preset_name
                    << "' (see: surfsim list-presets)\n";
          return 2;
        }
        preset = *p;
      } else if (!config_path.empty()) {
        const auto cfg = surfsim::load_config_file(config_path);
        preset = surfsim::preset_from_config(
            cfg, std::filesystem::path(config_path).stem().string());
      } else {
        std::cerr << "run: need --preset or --config\n";
        return 2;
      }

      surfsim::CampaignOptions options;
      options.jobs = jobs;
      options.seed = seed;
      options.runs = runs;
      options.keep_traces = keep_traces;
      surfsim::run_campaign(preset, options, out_dir);
      std::printf("wrote %s/%s (%zu cells)\n", out_dir.c_str(), preset.name.c_str(),
                  preset.cells.size());
      return 0;
    }

    // dump subcommands share the world of run 0
    surfsim::ScenarioConfig cfg;
    if (!dump_config.empty()) cfg = surfsim::load_config_file(dump_config);
    surfsim::Rng rng(surfsim::Rng::split(dump_seed, 0));
    const auto topo = surfsim::generate_topology(cfg, rng);
    if (dump_topo->parsed()) {
      std::fputs(surfsim::dump_topology(topo).c_str(), stdout);
    } else {
      auto state = surfsim::sample_pr_state(cfg.pr_model, topo, cfg.total_slots, rng);
      std::fputs(surfsim::dump_channel_views(topo, state, cfg.beta).c_str(), stdout);
    }
    return 0;
  } catch (const surfsim::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
