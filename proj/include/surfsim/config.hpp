#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surfsim {

enum class StrategyKind { Surf, Rd, Sb, Ca };

enum class PrMode {
  FixedSlots,    // every channel has a constant number of PR-occupied slots
  DynamicOnOff,  // each PR toggles ON/OFF per hop with its own probability in [0.20, 0.80]
};

struct PrModel {
  PrMode mode = PrMode::DynamicOnOff;
  int fixed_slots = 0;  // FixedSlots only

  bool operator==(const PrModel&) const = default;
};

struct ScenarioConfig {
  int num_cr_nodes = 70;
  int num_pr_nodes = 30;
  int num_channels = 5;
  int acs_size = 3;
  int total_slots = 6;      // tau_t, slots per channel
  double area_side = 707.0; // meters
  double tx_range = 250.0;  // meters
  int beta = 10;            // tenancy factor
  PrModel pr_model{};
  StrategyKind strategy = StrategyKind::Surf;
  int num_runs = 1000;
  std::uint64_t rng_seed = 1;

  bool operator==(const ScenarioConfig&) const = default;
};

// Raised by the config-file parser; `keys` names every offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::vector<std::string> keys)
      : std::runtime_error(what), keys_(std::move(keys)) {}
  const std::vector<std::string>& keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;
};

// One message per violated invariant; empty means valid.
std::vector<std::string> validate(const ScenarioConfig& cfg);
void validate_or_throw(const ScenarioConfig& cfg);

const char* to_string(StrategyKind kind);
StrategyKind strategy_from_string(std::string_view token);
std::string to_string(const PrModel& model);
PrModel pr_model_from_string(std::string_view token);

// Flat key=value scenario files. Field names mirror ScenarioConfig; '#' starts
// a comment; unknown keys are rejected; missing keys keep their defaults.
ScenarioConfig parse_config_text(std::string_view text);
ScenarioConfig load_config_file(const std::filesystem::path& path);
std::string to_config_text(const ScenarioConfig& cfg);  // lossless round trip

}  // namespace surfsim
