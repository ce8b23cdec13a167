#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfsim/config.hpp"

namespace surfsim {

// One point of a preset's parameter grid, fully resolved.
struct PresetCell {
  std::string label;  // e.g. "tau_o=2,beta=6"
  std::vector<std::pair<std::string, std::string>> axes;
  ScenarioConfig config;
};

struct Preset {
  std::string name;
  std::string description;
  std::vector<PresetCell> cells;
};

// The built-in experiment grids:
//   beta-vs-pr             receivers/loss vs beta under fixed PR slot counts
//   beta-vs-acs            beta sensitivity to the Acs size, PR occupancy 0
//   beta-dynamic           beta under per-PR random ON/OFF activity
//   strategy-blocking      blocking ratio of surf/rd/sb/ca at Ch=5 and Ch=15
//   strategy-dissemination delivery and accumulative receivers, same cells
const std::vector<Preset>& presets();

const Preset* find_preset(const std::string& name);

}  // namespace surfsim
