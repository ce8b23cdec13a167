#include "surfsim/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace surfsim {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& cfg) {
  std::vector<std::string> errors;
  auto bad = [&](const std::string& msg) { errors.push_back(msg); };

  if (cfg.num_cr_nodes < 1) bad("num_cr_nodes: must be >= 1");
  if (cfg.num_pr_nodes < 0) bad("num_pr_nodes: must be >= 0");
  if (cfg.num_channels < 1 || cfg.num_channels > 32)
    bad("num_channels: must be in [1, 32]");
  if (cfg.acs_size < 1 || cfg.acs_size > cfg.num_channels)
    bad("acs_size: must satisfy 0 < acs_size <= num_channels");
  if (cfg.total_slots < 1) bad("total_slots: must be >= 1");
  if (!(cfg.area_side > 0.0)) bad("area_side: must be > 0");
  if (!(cfg.tx_range > 0.0)) bad("tx_range: must be > 0");
  if (cfg.beta < 1) bad("beta: must be >= 1");
  if (cfg.pr_model.mode == PrMode::FixedSlots &&
      (cfg.pr_model.fixed_slots < 0 || cfg.pr_model.fixed_slots > cfg.total_slots))
    bad("pr_model: fixed slots must be in [0, total_slots]");
  if (cfg.num_runs < 1) bad("num_runs: must be >= 1");
  return errors;
}

void validate_or_throw(const ScenarioConfig& cfg) {
  auto errors = validate(cfg);
  if (errors.empty()) return;
  std::string what = "invalid scenario config:";
  std::vector<std::string> keys;
  for (const auto& e : errors) {
    what += "\n  " + e;
    keys.push_back(e.substr(0, e.find(':')));
  }
  throw ConfigError(what, std::move(keys));
}

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Surf: return "surf";
    case StrategyKind::Rd: return "rd";
    case StrategyKind::Sb: return "sb";
    case StrategyKind::Ca: return "ca";
  }
  return "?";
}

StrategyKind strategy_from_string(std::string_view token) {
  if (token == "surf") return StrategyKind::Surf;
  if (token == "rd") return StrategyKind::Rd;
  if (token == "sb") return StrategyKind::Sb;
  if (token == "ca") return StrategyKind::Ca;
  throw ConfigError("strategy: unknown token '" + std::string(token) +
                        "' (expected surf|rd|sb|ca)",
                    {"strategy"});
}

std::string to_string(const PrModel& model) {
  if (model.mode == PrMode::DynamicOnOff) return "dynamic";
  return "fixed:" + std::to_string(model.fixed_slots);
}

PrModel pr_model_from_string(std::string_view token) {
  if (token == "dynamic") return PrModel{PrMode::DynamicOnOff, 0};
  if (token.starts_with("fixed:")) {
    const std::string_view num = token.substr(6);
    int slots = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), slots);
    if (ec == std::errc() && p == num.data() + num.size())
      return PrModel{PrMode::FixedSlots, slots};
  }
  throw ConfigError("pr_model: unknown token '" + std::string(token) +
                        "' (expected dynamic | fixed:<slots>)",
                    {"pr_model"});
}

ScenarioConfig parse_config_text(std::string_view text) {
  ScenarioConfig cfg;
  std::vector<std::string> bad_keys;
  std::string what;

  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;

    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      bad_keys.push_back(stripped);
      what += "\n  line " + std::to_string(line_no) + ": expected key=value";
      continue;
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));

    try {
      if (key == "num_cr_nodes") cfg.num_cr_nodes = std::stoi(value);
      else if (key == "num_pr_nodes") cfg.num_pr_nodes = std::stoi(value);
      else if (key == "num_channels") cfg.num_channels = std::stoi(value);
      else if (key == "acs_size") cfg.acs_size = std::stoi(value);
      else if (key == "total_slots") cfg.total_slots = std::stoi(value);
      else if (key == "area_side") cfg.area_side = std::stod(value);
      else if (key == "tx_range") cfg.tx_range = std::stod(value);
      else if (key == "beta") cfg.beta = std::stoi(value);
      else if (key == "pr_model") cfg.pr_model = pr_model_from_string(value);
      else if (key == "strategy") cfg.strategy = strategy_from_string(value);
      else if (key == "num_runs") cfg.num_runs = std::stoi(value);
      else if (key == "rng_seed") cfg.rng_seed = std::stoull(value);
      else {
        bad_keys.push_back(key);
        what += "\n  line " + std::to_string(line_no) + ": unknown key '" + key + "'";
      }
    } catch (const ConfigError& e) {
      bad_keys.push_back(key);
      what += "\n  line " + std::to_string(line_no) + ": " + e.what();
    } catch (const std::exception&) {
      bad_keys.push_back(key);
      what += "\n  line " + std::to_string(line_no) + ": bad value '" + value +
              "' for key '" + key + "'";
    }
  }

  if (!bad_keys.empty())
    throw ConfigError("config parse failed:" + what, std::move(bad_keys));
  validate_or_throw(cfg);
  return cfg;
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string to_config_text(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "num_cr_nodes=" << cfg.num_cr_nodes << '\n'
      << "num_pr_nodes=" << cfg.num_pr_nodes << '\n'
      << "num_channels=" << cfg.num_channels << '\n'
      << "acs_size=" << cfg.acs_size << '\n'
      << "total_slots=" << cfg.total_slots << '\n'
      << "area_side=" << fmt_double(cfg.area_side) << '\n'
      << "tx_range=" << fmt_double(cfg.tx_range) << '\n'
      << "beta=" << cfg.beta << '\n'
      << "pr_model=" << to_string(cfg.pr_model) << '\n'
      << "strategy=" << to_string(cfg.strategy) << '\n'
      << "num_runs=" << cfg.num_runs << '\n'
      << "rng_seed=" << cfg.rng_seed << '\n';
  return out.str();
}

}  // namespace surfsim
