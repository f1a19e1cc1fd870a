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

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "qfcs/types.hpp"

namespace {

// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
constexpr int kConfigExit = 2;
constexpr int kNumericalExit = 3;

struct SubArgs {
  std::string config_path;
  qfcs_cli::CliOptions opts;
};

void add_common(CLI::App* sub, SubArgs& args) {
  sub->add_option("--config", args.config_path, "configuration file (TOML or JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", args.opts.out_dir, "output directory (default: output.dir from config)");
  sub->add_option("--threads", args.opts.threads, "worker threads (0 = hardware)");
  sub->add_option("--dt", args.opts.dt_override, "time-step override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counting statistics of work and heat in driven open quantum systems"};
  app.require_subcommand(1);

  SubArgs args;
  CLI::App* simulate =
      app.add_subcommand("simulate", "distributions, moment curves and fluctuation checks");
  CLI::App* longtime = app.add_subcommand("longtime", "long-time cumulants of a static model");
  CLI::App* sweep = app.add_subcommand("sweep", "coupled-qubit Fano/correlation grid");
  CLI::App* g2 = app.add_subcommand("g2", "two-time intensity correlation");
  CLI::App* check_ft = app.add_subcommand("check-ft", "fluctuation-relation battery");
  for (CLI::App* sub : {simulate, longtime, sweep, g2, check_ft}) add_common(sub, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    (void)app.exit(e);
    return kConfigExit;
  }

  try {
    const qfcs_cli::RunConfig cfg = qfcs_cli::load_config(args.config_path);
    if (simulate->parsed()) return qfcs_cli::cmd_simulate(cfg, args.opts);
    if (longtime->parsed()) return qfcs_cli::cmd_longtime(cfg, args.opts);
    if (sweep->parsed()) return qfcs_cli::cmd_sweep(cfg, args.opts);
    if (g2->parsed()) return qfcs_cli::cmd_g2(cfg, args.opts);
    if (check_ft->parsed()) return qfcs_cli::cmd_check_ft(cfg, args.opts);
    return kConfigExit;
  } catch (const qfcs_cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigExit;
  } catch (const qfcs::PreconditionError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigExit;
  } catch (const qfcs::DimensionError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigExit;
  } catch (const qfcs::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNumericalExit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumericalExit;
  }
}
