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

#ifndef QFCS_TOOLS_COMMANDS_HPP
#define QFCS_TOOLS_COMMANDS_HPP

#include <string>

#include "config.hpp"

namespace qfcs_cli {

struct CliOptions {
  std::string out_dir;      // empty = config output.dir
  int threads = 0;          // 0 = hardware count
  double dt_override = 0.0; // 0 = config / automatic
};

int cmd_simulate(const RunConfig& cfg, const CliOptions& opts);
int cmd_longtime(const RunConfig& cfg, const CliOptions& opts);
int cmd_sweep(const RunConfig& cfg, const CliOptions& opts);
int cmd_g2(const RunConfig& cfg, const CliOptions& opts);
int cmd_check_ft(const RunConfig& cfg, const CliOptions& opts);

}  // namespace qfcs_cli

#endif  // QFCS_TOOLS_COMMANDS_HPP
