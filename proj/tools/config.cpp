// Copyright 2026 The qfcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qfcs_cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConfigValue from_json_value(const json& j, const std::string& where) {
  ConfigValue v;
  if (j.is_boolean()) {
    v.kind = ConfigValue::Kind::kBool;
    v.boolean = j.get<bool>();
  } else if (j.is_number()) {
    v.kind = ConfigValue::Kind::kNumber;
    v.number = j.get<double>();
  } else if (j.is_string()) {
    v.kind = ConfigValue::Kind::kString;
    v.text = j.get<std::string>();
  } else if (j.is_array()) {
    if (!j.empty() && j.front().is_string()) {
      v.kind = ConfigValue::Kind::kStringArray;
      for (const auto& item : j) v.texts.push_back(item.get<std::string>());
    } else {
      v.kind = ConfigValue::Kind::kNumberArray;
      for (const auto& item : j) v.numbers.push_back(item.get<double>());
    }
  } else {
    throw ConfigError(where + ": unsupported value type");
  }
  return v;
}

ConfigTable table_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");
  ConfigTable table;
  for (const auto& [section, body] : root.items()) {
    if (!body.is_object()) throw ConfigError("config section '" + section + "' must be an object");
    for (const auto& [key, value] : body.items()) {
      table[section][key] = from_json_value(value, section + "." + key);
    }
  }
  return table;
}

class Section {
 public:
  Section(const ConfigTable& table, std::string name) : name_(std::move(name)) {
    auto it = table.find(name_);
    if (it != table.end()) body_ = &it->second;
  }

  bool present() const { return body_ != nullptr; }

  const ConfigValue* find(const std::string& key) const {
    if (!body_) return nullptr;
    auto it = body_->find(key);
    return it == body_->end() ? nullptr : &it->second;
  }

  std::optional<double> number(const std::string& key) const {
    const ConfigValue* v = find(key);
    if (!v) return std::nullopt;
    if (v->kind != ConfigValue::Kind::kNumber) {
      throw ConfigError(name_ + "." + key + " must be a number");
    }
    return v->number;
  }

  double number_or(const std::string& key, double fallback) const {
    return number(key).value_or(fallback);
  }

  double require_positive(const std::string& key) const {
    const auto v = number(key);
    if (!v) throw ConfigError(name_ + "." + key + " is required");
    if (!(*v > 0.0)) throw ConfigError(name_ + "." + key + " must be positive");
    return *v;
  }

  std::optional<std::string> text(const std::string& key) const {
    const ConfigValue* v = find(key);
    if (!v) return std::nullopt;
    if (v->kind != ConfigValue::Kind::kString) {
      throw ConfigError(name_ + "." + key + " must be a string");
    }
    return v->text;
  }

  std::optional<bool> boolean(const std::string& key) const {
    const ConfigValue* v = find(key);
    if (!v) return std::nullopt;
    if (v->kind != ConfigValue::Kind::kBool) {
      throw ConfigError(name_ + "." + key + " must be a boolean");
    }
    return v->boolean;
  }

  std::vector<double> numbers_or(const std::string& key, std::vector<double> fallback) const {
    const ConfigValue* v = find(key);
    if (!v) return fallback;
    if (v->kind != ConfigValue::Kind::kNumberArray) {
      throw ConfigError(name_ + "." + key + " must be an array of numbers");
    }
    return v->numbers;
  }

  int integer_or(const std::string& key, int fallback) const {
    const auto v = number(key);
    if (!v) return fallback;
    const double r = std::round(*v);
    if (std::abs(*v - r) > 1e-9) throw ConfigError(name_ + "." + key + " must be an integer");
    return int(r);
  }

 private:
  std::string name_;
  const std::map<std::string, ConfigValue>* body_ = nullptr;
};

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

double RunConfig::beta_value() const {
  if (bath.zero_temperature) return qfcs::kInfiniteBeta;
  if (!bath.beta) throw ConfigError("bath.beta is required unless bath.zero_temperature = true");
  if (!(*bath.beta >= 0.0)) throw ConfigError("bath.beta must be >= 0");
  return *bath.beta;
}

double RunConfig::transition_energy() const { return system.nu; }

double RunConfig::required_t_final() const {
  if (!run.t_final) throw ConfigError("run.t_final is required");
  if (!(*run.t_final > 0.0)) throw ConfigError("run.t_final must be positive");
  return *run.t_final;
}

qfcs::SystemModel RunConfig::build_model() const {
  const auto& s = system;
  const double wd = s.omega_d.value_or(s.nu);
  if (s.type == "driven_qubit") {
    return qfcs::build_driven_qubit(s.nu, s.omega, wd, s.gamma, beta_value(), s.drive_stop);
  }
  if (s.type == "undriven_qubit") {
    return qfcs::build_undriven_qubit(s.nu, s.gamma, beta_value());
  }
  if (s.type == "rwa_qubit") {
    return qfcs::build_rwa_qubit(s.omega, s.delta, s.gamma, s.nu);
  }
  if (s.type == "harmonic_oscillator") {
    return qfcs::build_harmonic_oscillator(s.nu, s.omega, wd, s.gamma, s.n_fock);
  }
  if (s.type == "rwa_oscillator") {
    return qfcs::build_rwa_oscillator(s.nu, s.omega, wd, s.gamma, s.n_fock);
  }
  if (s.type == "coupled_qubits") {
    return qfcs::build_coupled_qubits(s.omega, s.omega_xx, s.gamma, s.nu);
  }
  if (s.type == "three_level") {
    return qfcs::build_three_level(s.rabi, s.gamma);
  }
  throw ConfigError("system.type '" + s.type + "' is not recognized");
}

RunConfig load_config(const std::string& path) {
  const std::string text = read_file(path);
  ConfigTable table;
  const bool looks_json = path.size() > 5 && path.substr(path.size() - 5) == ".json";
  size_t first = text.find_first_not_of(" \t\r\n");
  if (looks_json || (first != std::string::npos && text[first] == '{')) {
    table = table_from_json(text);
  } else {
    table = parse_toml(text);
  }

  RunConfig cfg;
  const Section sys(table, "system");
  if (!sys.present()) throw ConfigError("missing [system] section");
  cfg.system.type = sys.text("type").value_or("");
  if (cfg.system.type.empty()) throw ConfigError("system.type is required");
  cfg.system.nu = sys.number_or("nu", 1.0);
  cfg.system.omega = sys.number_or("omega", 0.0);
  if (auto wd = sys.number("omega_d")) cfg.system.omega_d = *wd;
  cfg.system.gamma = sys.number_or("gamma", 0.0);
  cfg.system.delta = sys.number_or("delta", 0.0);
  cfg.system.omega_xx = sys.number_or("omega_xx", 0.0);
  cfg.system.rabi = sys.number_or("rabi", 0.0);
  cfg.system.n_fock = sys.integer_or("n_fock", 16);
  if (auto stop = sys.number("drive_stop")) cfg.system.drive_stop = *stop;
  if (!(cfg.system.nu > 0.0)) throw ConfigError("system.nu must be positive");

  const Section bath(table, "bath");
  cfg.bath.zero_temperature = bath.boolean("zero_temperature").value_or(false);
  if (auto b = bath.number("beta")) cfg.bath.beta = *b;

  const Section counting(table, "counting");
  cfg.counting.grid_size = counting.integer_or("grid_size", 64);
  cfg.counting.spacing = counting.number_or("spacing", cfg.system.nu);
  cfg.counting.max_grid = counting.integer_or("max_grid", 1024);
  cfg.counting.p_floor = counting.number_or("p_floor", 1e-6);
  if (!is_power_of_two(cfg.counting.grid_size)) {
    throw ConfigError("counting.grid_size must be a power of two");
  }
  if (!is_power_of_two(cfg.counting.max_grid) || cfg.counting.max_grid < cfg.counting.grid_size) {
    throw ConfigError("counting.max_grid must be a power of two >= counting.grid_size");
  }
  if (!(cfg.counting.spacing > 0.0)) throw ConfigError("counting.spacing must be positive");

  const Section run(table, "run");
  if (auto t = run.number("t_final")) cfg.run.t_final = *t;
  cfg.run.dt = run.number_or("dt", 0.0);
  if (cfg.run.dt < 0.0) throw ConfigError("run.dt must be >= 0");
  cfg.run.time_samples = run.integer_or("time_samples", 200);
  if (cfg.run.time_samples < 2) throw ConfigError("run.time_samples must be >= 2");
  cfg.run.averaging_window = run.number_or("averaging_window", 0.0);
  if (cfg.run.averaging_window < 0.0) throw ConfigError("run.averaging_window must be >= 0");

  const Section sweep(table, "sweep");
  cfg.sweep.omega_min = sweep.number_or("omega_min", 1.0);
  cfg.sweep.omega_max = sweep.number_or("omega_max", 40.0);
  cfg.sweep.omega_steps = sweep.integer_or("omega_steps", 40);
  cfg.sweep.omega_xx_min = sweep.number_or("omega_xx_min", 1.0);
  cfg.sweep.omega_xx_max = sweep.number_or("omega_xx_max", 40.0);
  cfg.sweep.omega_xx_steps = sweep.integer_or("omega_xx_steps", 40);
  if (cfg.sweep.omega_steps < 1 || cfg.sweep.omega_xx_steps < 1) {
    throw ConfigError("sweep step counts must be >= 1");
  }

  const Section g2(table, "g2");
  cfg.g2.t_max = g2.number_or("t_max", 10.0);
  cfg.g2.samples = g2.integer_or("samples", 400);
  if (cfg.g2.samples < 2) throw ConfigError("g2.samples must be >= 2");
  if (!(cfg.g2.t_max > 0.0)) throw ConfigError("g2.t_max must be positive");
  for (double c : g2.numbers_or("channels", {})) {
    const int idx = int(std::round(c));
    if (idx < 0) throw ConfigError("g2.channels entries must be >= 0");
    cfg.g2.channels.push_back(idx);
  }

  const Section output(table, "output");
  cfg.output.dir = output.text("dir").value_or("out");

  return cfg;
}

}  // namespace qfcs_cli
