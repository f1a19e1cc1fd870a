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

#ifndef QFCS_TOOLS_CONFIG_HPP
#define QFCS_TOOLS_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qfcs/model.hpp"
#include "toml_lite.hpp"

namespace qfcs_cli {

struct SystemConfig {
  std::string type;
  double nu = 1.0;
  double omega = 0.0;
  std::optional<double> omega_d;  // defaults to nu
  double gamma = 0.0;
  double delta = 0.0;
  double omega_xx = 0.0;
  double rabi = 0.0;
  int n_fock = 16;
  std::optional<double> drive_stop;
};

struct BathConfig {
  std::optional<double> beta;
  bool zero_temperature = false;
};

struct CountingConfig {
  int grid_size = 64;
  double spacing = 1.0;
  int max_grid = 1024;
  double p_floor = 1e-6;
};

struct RunBlock {
  std::optional<double> t_final;
  double dt = 0.0;  // 0 = automatic
  int time_samples = 200;
  double averaging_window = 0.0;
};

struct SweepBlock {
  double omega_min = 1.0, omega_max = 40.0;
  int omega_steps = 40;
  double omega_xx_min = 1.0, omega_xx_max = 40.0;
  int omega_xx_steps = 40;
};

struct G2Block {
  double t_max = 10.0;
  int samples = 400;
  std::vector<int> channels;  // empty = all
};

struct OutputBlock {
  std::string dir = "out";
};

struct RunConfig {
  SystemConfig system;
  BathConfig bath;
  CountingConfig counting;
  RunBlock run;
  SweepBlock sweep;
  G2Block g2;
  OutputBlock output;

  double beta_value() const;  // resolves the zero-temperature flag
  qfcs::SystemModel build_model() const;
  double transition_energy() const;  // counted heat quantum
  double required_t_final() const;
};

// Reads TOML (default) or JSON (by .json extension or a leading '{').
RunConfig load_config(const std::string& path);

}  // namespace qfcs_cli

#endif  // QFCS_TOOLS_CONFIG_HPP
