#include "surfsim/presets.hpp"

#include <stdexcept>

namespace surfsim {
namespace {

const std::vector<int> kBetaSweep = {1, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 24, 28, 32};

ScenarioConfig paper_base() {
  ScenarioConfig cfg;  // defaults already carry N=70, 30 PRs, tau_t=6, 707m, 250m
  cfg.num_runs = 1000;
  cfg.rng_seed = 1;
  return cfg;
}

PresetCell make_cell(ScenarioConfig cfg,
                     std::vector<std::pair<std::string, std::string>> axes) {
  PresetCell cell;
  cell.config = cfg;
  cell.axes = std::move(axes);
  // ';' keeps the label usable as a single CSV field
  for (std::size_t i = 0; i < cell.axes.size(); ++i) {
    if (i) cell.label += ';';
    cell.label += cell.axes[i].first + '=' + cell.axes[i].second;
  }
  return cell;
}

Preset beta_vs_pr() {
  Preset p;
  p.name = "beta-vs-pr";
  p.description =
      "SURF beta sweep at Ch=5, Acs=3 for fixed PR slot counts 0/2/3 "
      "(neighbors, receivers, loss per hop)";
  for (int tau_o : {0, 2, 3}) {
    for (int beta : kBetaSweep) {
      ScenarioConfig cfg = paper_base();
      cfg.num_channels = 5;
      cfg.acs_size = 3;
      cfg.strategy = StrategyKind::Surf;
      cfg.pr_model = PrModel{PrMode::FixedSlots, tau_o};
      cfg.beta = beta;
      p.cells.push_back(make_cell(cfg, {{"tau_o", std::to_string(tau_o)},
                                        {"beta", std::to_string(beta)}}));
    }
  }
  return p;
}

Preset beta_vs_acs() {
  Preset p;
  p.name = "beta-vs-acs";
  p.description =
      "SURF beta sweep with PR occupancy 0 while the Acs size shrinks "
      "(Ch=5: 5/4/3, Ch=15: 15/12/8)";
  const std::vector<std::pair<int, std::vector<int>>> families = {
      {5, {5, 4, 3}}, {15, {15, 12, 8}}};
  for (const auto& [channels, acs_sizes] : families) {
    for (int acs : acs_sizes) {
      for (int beta : kBetaSweep) {
        ScenarioConfig cfg = paper_base();
        cfg.num_channels = channels;
        cfg.acs_size = acs;
        cfg.strategy = StrategyKind::Surf;
        cfg.pr_model = PrModel{PrMode::FixedSlots, 0};
        cfg.beta = beta;
        p.cells.push_back(make_cell(cfg, {{"channels", std::to_string(channels)},
                                          {"acs", std::to_string(acs)},
                                          {"beta", std::to_string(beta)}}));
      }
    }
  }
  return p;
}

Preset beta_dynamic() {
  Preset p;
  p.name = "beta-dynamic";
  p.description =
      "SURF beta sweep under per-PR random ON/OFF activity; picks the "
      "operating beta (10 for Ch=5, 18 for Ch=15)";
  const std::vector<std::pair<int, int>> families = {{5, 3}, {15, 8}};
  for (const auto& [channels, acs] : families) {
    for (int beta : kBetaSweep) {
      ScenarioConfig cfg = paper_base();
      cfg.num_channels = channels;
      cfg.acs_size = acs;
      cfg.strategy = StrategyKind::Surf;
      cfg.pr_model = PrModel{PrMode::DynamicOnOff, 0};
      cfg.beta = beta;
      p.cells.push_back(make_cell(cfg, {{"channels", std::to_string(channels)},
                                        {"acs", std::to_string(acs)},
                                        {"beta", std::to_string(beta)}}));
    }
  }
  return p;
}

Preset strategy_cells(const std::string& name, const std::string& description) {
  Preset p;
  p.name = name;
  p.description = description;
  for (int channels : {5, 15}) {
    for (StrategyKind kind :
         {StrategyKind::Surf, StrategyKind::Rd, StrategyKind::Sb, StrategyKind::Ca}) {
      ScenarioConfig cfg = paper_base();
      cfg.num_channels = channels;
      cfg.acs_size = channels == 5 ? 3 : 8;
      cfg.beta = channels == 5 ? 10 : 18;
      cfg.strategy = kind;
      cfg.pr_model = PrModel{PrMode::DynamicOnOff, 0};
      p.cells.push_back(make_cell(cfg, {{"channels", std::to_string(channels)},
                                        {"strategy", to_string(kind)}}));
    }
  }
  return p;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      beta_vs_pr(),
      beta_vs_acs(),
      beta_dynamic(),
      strategy_cells("strategy-blocking",
                     "blocking ratio of surf/rd/sb/ca at Ch=5 and Ch=15 "
                     "(dynamic PR activity, operating beta per channel count)"),
      strategy_cells("strategy-dissemination",
                     "delivery ratio and accumulative receivers for "
                     "surf/rd/sb/ca at Ch=5 and Ch=15"),
  };
  return all;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace surfsim
