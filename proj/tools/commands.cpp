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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>

#include "json.hpp"
#include "qfcs/qfcs.hpp"

namespace qfcs_cli {

namespace {

using nlohmann::json;
using namespace qfcs;

constexpr Complex kI{0.0, 1.0};
constexpr int kSchemaVersion = 1;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::filesystem::path ensure_out_dir(const RunConfig& cfg, const CliOptions& opts) {
  const std::filesystem::path dir = opts.out_dir.empty() ? cfg.output.dir : opts.out_dir;
  std::filesystem::create_directories(dir);
  return dir;
}

void write_text(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
}

void write_json(const std::filesystem::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

PropagationOptions propagation_options(const RunConfig& cfg, const CliOptions& opts) {
  PropagationOptions p;
  if (opts.dt_override > 0.0) {
    p.dt = opts.dt_override;
  } else if (cfg.run.dt > 0.0) {
    p.dt = cfg.run.dt;
  }
  return p;
}

// Samples the generating function on the counting grid (parallel over u),
// inverts, and doubles the grid until the outermost bins are empty.
EnergyDistribution adaptive_distribution(const std::function<Complex(Complex)>& gf,
                                         const CountingConfig& counting, int threads) {
  int n = counting.grid_size;
  for (;;) {
    const auto grid = counting_grid(counting.spacing, n);
    std::vector<Complex> samples(grid.size());
    parallel_for(int(grid.size()), threads,
                 [&](int k) { samples[size_t(k)] = gf(grid[size_t(k)]); });
    EnergyDistribution dist = invert_distribution(samples, grid, counting.spacing);
    const auto& p = dist.probabilities;
    double edge = std::max(p.front(), p.back());
    if (p.size() >= 4) edge = std::max(edge, std::max(p[1], p[p.size() - 2]));
    if (edge < 1e-8 || n >= counting.max_grid) return dist;
    n *= 2;
  }
}

std::string distribution_csv(const EnergyDistribution& dist) {
  std::string body = "energy,probability\n";
  for (int i = 0; i < dist.size(); ++i) {
    body += num(dist.energy(i)) + "," + num(dist.probabilities[size_t(i)]) + "\n";
  }
  return body;
}

std::vector<double> moving_average(const std::vector<double>& y, const std::vector<double>& t,
                                   double window) {
  if (window <= 0.0) return y;
  std::vector<double> out(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    double acc = 0.0;
    int cnt = 0;
    for (size_t j = 0; j < y.size(); ++j) {
      if (std::abs(t[j] - t[i]) <= window / 2.0 + 1e-12 && std::isfinite(y[j])) {
        acc += y[j];
        ++cnt;
      }
    }
    out[i] = cnt ? acc / double(cnt) : y[i];
  }
  return out;
}

json series_json(const std::vector<double>& v) {
  json arr = json::array();
  for (double x : v) {
    if (std::isfinite(x)) {
      arr.push_back(x);
    } else {
      arr.push_back(nullptr);
    }
  }
  return arr;
}

struct MomentCurves {
  std::vector<double> time, mean, variance, f_ratio;
};

// One trajectory per finite-difference node; cumulants recovered per sample time.
MomentCurves moment_curves(const SystemModel& model, const RunConfig& cfg,
                           const PropagationOptions& popts, bool heat, int threads) {
  const double t_final = cfg.required_t_final();
  const double nu = cfg.transition_energy();
  const double h = 0.05 / nu;
  const std::array<double, 7> nodes{-2.0 * h, -h, -h / 2.0, 0.0, h / 2.0, h, 2.0 * h};

  MomentCurves curves;
  const int samples = cfg.run.time_samples;
  curves.time.resize(size_t(samples));
  for (int i = 0; i < samples; ++i) {
    curves.time[size_t(i)] = t_final * double(i + 1) / double(samples);
  }

  std::array<std::vector<Complex>, 7> series;
  parallel_for(7, threads, [&](int k) {
    const double u = nodes[size_t(k)];
    if (heat) {
      series[size_t(k)] = heat_gf_time_series(
          model, CountingField::uniform(u, std::max(1, model.counting_dim())), curves.time, popts);
    } else {
      series[size_t(k)] = work_gf_time_series(model, Complex(u), curves.time, popts);
    }
  });

  curves.mean.assign(size_t(samples), std::numeric_limits<double>::quiet_NaN());
  curves.variance.assign(size_t(samples), std::numeric_limits<double>::quiet_NaN());
  curves.f_ratio.assign(size_t(samples), std::numeric_limits<double>::quiet_NaN());
  const double beta = model.beta();
  for (int i = 0; i < samples; ++i) {
    std::array<Complex, 7> g;
    for (size_t k = 0; k < 7; ++k) g[k] = series[k][size_t(i)];
    try {
      const MomentSet ms = cumulants_from_nodes(g, h, 1e-3, 1e-6);
      curves.mean[size_t(i)] = ms.mean;
      curves.variance[size_t(i)] = ms.variance;
      if (std::abs(ms.mean) > 1e-12) {
        curves.f_ratio[size_t(i)] = moment_ratio(ms, beta, nu);
      }
    } catch (const NumericalError&) {
      // left as NaN/null in the output
    }
  }
  if (cfg.run.averaging_window > 0.0) {
    curves.mean = moving_average(curves.mean, curves.time, cfg.run.averaging_window);
    curves.variance = moving_average(curves.variance, curves.time, cfg.run.averaging_window);
    curves.f_ratio = moving_average(curves.f_ratio, curves.time, cfg.run.averaging_window);
  }
  return curves;
}

bool protocol_is_closed(const SystemModel& model, double t) {
  const OperatorMatrix h0 = model.hamiltonian_at(0.0);
  const OperatorMatrix ht = model.hamiltonian_at(t);
  return (h0 - ht).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, h0.cwiseAbs().maxCoeff());
}

std::vector<double> symmetry_points(double spacing, int count) {
  std::vector<double> us(size_t(count));
  for (int i = 0; i < count; ++i) {
    us[size_t(i)] = -std::numbers::pi / spacing +
                    2.0 * std::numbers::pi * double(i) / (double(count) * spacing);
  }
  return us;
}

struct PinnedCrooks {
  double dev_one = std::numeric_limits<double>::quiet_NaN();
  double dev_two = std::numeric_limits<double>::quiet_NaN();
};

PinnedCrooks pinned_crooks(const EnergyDistribution& fwd, const EnergyDistribution& rev,
                           double beta, double spacing, double floor) {
  PinnedCrooks out;
  auto dev_at = [&](int m) {
    const double p = fwd.at_m(m);
    const double pr = rev.at_m(-m);
    if (p <= floor || pr <= floor) return std::numeric_limits<double>::quiet_NaN();
    return std::abs(std::log(p / pr) - beta * double(m) * spacing);
  };
  out.dev_one = dev_at(1);
  out.dev_two = dev_at(2);
  return out;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, const CliOptions& opts) {
  const SystemModel model = cfg.build_model();
  for (const auto& w : model.warnings()) std::fprintf(stderr, "warning: %s\n", w.c_str());
  const auto out_dir = ensure_out_dir(cfg, opts);
  const PropagationOptions popts = propagation_options(cfg, opts);
  const double t_final = cfg.required_t_final();
  const double spacing = cfg.counting.spacing;

  const EnergyDistribution work = adaptive_distribution(
      [&](Complex u) { return generating_function_work(model, u, t_final, popts, spacing).value; },
      cfg.counting, opts.threads);
  const EnergyDistribution heat = adaptive_distribution(
      [&](Complex u) {
        return generating_function_heat(
                   model, CountingField::uniform(u, std::max(1, model.counting_dim())), t_final,
                   popts)
            .value;
      },
      cfg.counting, opts.threads);
  write_text(out_dir / "work_distribution.csv", distribution_csv(work));
  write_text(out_dir / "heat_distribution.csv", distribution_csv(heat));

  const MomentCurves wm = moment_curves(model, cfg, popts, /*heat=*/false, opts.threads);
  const MomentCurves qm = moment_curves(model, cfg, popts, /*heat=*/true, opts.threads);
  json moments{{"schema_version", kSchemaVersion},
               {"beta", model.zero_temperature() ? json(nullptr) : json(model.beta())},
               {"nu", cfg.transition_energy()},
               {"time", series_json(wm.time)},
               {"work",
                {{"mean", series_json(wm.mean)},
                 {"variance", series_json(wm.variance)},
                 {"f_ratio", series_json(wm.f_ratio)}}},
               {"heat",
                {{"mean", series_json(qm.mean)},
                 {"variance", series_json(qm.variance)},
                 {"f_ratio", series_json(qm.f_ratio)}}}};
  write_json(out_dir / "moments.json", moments);

  json checks{{"schema_version", kSchemaVersion}};
  json notes = json::array();
  if (!model.zero_temperature()) {
    checks["jarzynski_residual"] = check_jarzynski(model, t_final, popts);
  } else {
    checks["jarzynski_residual"] = nullptr;
    notes.push_back("jarzynski check skipped: zero-temperature run");
  }
  if (!model.zero_temperature() && protocol_is_closed(model, t_final)) {
    const EnergyDistribution rev = adaptive_distribution(
        [&](Complex u) {
          return generating_function_work_reversed(model, u, t_final, popts, spacing).value;
        },
        cfg.counting, opts.threads);
    checks["crooks_max_dev"] = check_crooks(work, rev, model.beta(), cfg.counting.p_floor);
    checks["symmetry_max_dev"] =
        check_symmetry(model, t_final, symmetry_points(spacing, 32), popts);
  } else {
    checks["crooks_max_dev"] = nullptr;
    checks["symmetry_max_dev"] = nullptr;
    notes.push_back("reversed-protocol checks skipped: protocol not closed or zero temperature");
  }
  checks["notes"] = notes;
  write_json(out_dir / "fluctuation_checks.json", checks);
  return 0;
}

int cmd_longtime(const RunConfig& cfg, const CliOptions& opts) {
  const SystemModel model = cfg.build_model();
  for (const auto& w : model.warnings()) std::fprintf(stderr, "warning: %s\n", w.c_str());
  const auto out_dir = ensure_out_dir(cfg, opts);
  const CumulantSet c = cumulant_expansion(model);
  json j{{"schema_version", kSchemaVersion},
         {"nu", c.nu},
         {"channels", c.channels()},
         {"lambda1", c.lambda1()},
         {"lambda2", c.lambda2()},
         {"lambda12", c.lambda12},
         {"fano_double", c.fano()},
         {"fano_single", c.fano_single()}};
  write_json(out_dir / "cumulants.json", j);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const CliOptions& opts) {
  if (cfg.system.type != "coupled_qubits") {
    throw ConfigError("sweep requires system.type = \"coupled_qubits\"");
  }
  if (!(cfg.system.gamma > 0.0)) throw ConfigError("system.gamma must be positive");
  const auto out_dir = ensure_out_dir(cfg, opts);
  auto axis = [](double lo, double hi, int n) {
    std::vector<double> v(size_t(n));
    for (int i = 0; i < n; ++i) {
      v[size_t(i)] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
    }
    return v;
  };
  const auto omegas = axis(cfg.sweep.omega_min, cfg.sweep.omega_max, cfg.sweep.omega_steps);
  const auto xxs = axis(cfg.sweep.omega_xx_min, cfg.sweep.omega_xx_max, cfg.sweep.omega_xx_steps);
  const auto grid = sweep_fano(omegas, xxs, cfg.system.gamma, opts.threads);

  std::string body = "omega,omega_xx,fano_double,fano_single,c12_rate,entangled_flag\n";
  for (const auto& p : grid) {
    body += num(p.omega) + "," + num(p.omega_xx) + ",";
    if (p.ok) {
      body += num(p.fano_double) + "," + num(p.fano_single) + "," + num(p.c12_rate);
    } else {
      body += "nan,nan,nan";
    }
    body += std::string(",") + (p.entangled ? "true" : "false") + "\n";
  }
  write_text(out_dir / "sweep.csv", body);
  int failed = 0;
  for (const auto& p : grid) {
    if (!p.ok) ++failed;
  }
  if (failed > 0) std::fprintf(stderr, "warning: %d grid point(s) failed\n", failed);
  return 0;
}

int cmd_g2(const RunConfig& cfg, const CliOptions& opts) {
  const SystemModel model = cfg.build_model();
  const auto out_dir = ensure_out_dir(cfg, opts);
  std::vector<double> grid(size_t(cfg.g2.samples));
  for (int i = 0; i < cfg.g2.samples; ++i) {
    grid[size_t(i)] = cfg.g2.t_max * double(i) / double(cfg.g2.samples - 1);
  }
  const auto values = g2_correlator(model, grid, cfg.g2.channels);

  std::optional<std::pair<double, double>> oracle_params;  // (gamma, rabi)
  if (cfg.system.type == "three_level") {
    oracle_params = {{cfg.system.gamma, cfg.system.rabi}};
  } else if (cfg.system.type == "coupled_qubits" && cfg.system.omega_xx > 0.0) {
    oracle_params = {{cfg.system.gamma, cfg.system.omega * cfg.system.omega / cfg.system.omega_xx}};
  }
  std::string body = "t,g2,avg_g2_oracle\n";
  for (size_t i = 0; i < grid.size(); ++i) {
    body += num(grid[i]) + "," + num(values[i]) + ",";
    body += oracle_params
                ? num(oracles::avg_g2(grid[i], oracle_params->first, oracle_params->second))
                : "nan";
    body += "\n";
  }
  write_text(out_dir / "g2.csv", body);
  return 0;
}

int cmd_check_ft(const RunConfig& cfg, const CliOptions& opts) {
  const SystemModel model = cfg.build_model();
  if (model.zero_temperature()) {
    throw ConfigError("check-ft requires a finite-temperature configuration");
  }
  const auto out_dir = ensure_out_dir(cfg, opts);
  const PropagationOptions popts = propagation_options(cfg, opts);
  const double t_final = cfg.required_t_final();
  const double spacing = cfg.counting.spacing;
  const double beta = model.beta();

  int failures = 0;
  auto gate = [&failures](const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %s -- %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!pass) ++failures;
  };

  const double jarz = check_jarzynski(model, t_final, popts);
  gate("jarzynski |G_w(i beta) - 1| <= 1e-3", jarz <= 1e-3, "residual " + num(jarz));

  const EnergyDistribution work = adaptive_distribution(
      [&](Complex u) { return generating_function_work(model, u, t_final, popts, spacing).value; },
      cfg.counting, opts.threads);
  const EnergyDistribution heat = adaptive_distribution(
      [&](Complex u) {
        return generating_function_heat(
                   model, CountingField::uniform(u, std::max(1, model.counting_dim())), t_final,
                   popts)
            .value;
      },
      cfg.counting, opts.threads);

  if (protocol_is_closed(model, t_final)) {
    const EnergyDistribution rev = adaptive_distribution(
        [&](Complex u) {
          return generating_function_work_reversed(model, u, t_final, popts, spacing).value;
        },
        cfg.counting, opts.threads);
    const double floor = std::max(cfg.counting.p_floor, 1e-5);
    const PinnedCrooks pc = pinned_crooks(work, rev, beta, spacing, floor);
    const bool one_ok = std::isfinite(pc.dev_one) && pc.dev_one <= 0.02;
    const bool two_ok = !std::isfinite(pc.dev_two) || pc.dev_two <= 0.05;
    gate("work detailed ratio at +-1 quantum", one_ok,
         "deviation " + num(pc.dev_one) + " <= 0.02");
    gate("work detailed ratio at +-2 quanta", two_ok,
         std::isfinite(pc.dev_two) ? "deviation " + num(pc.dev_two) + " <= 0.05"
                                   : "bins below probability floor, skipped");

    const double sym = check_symmetry(model, t_final, symmetry_points(spacing, 32), popts);
    gate("forward/reversed symmetry <= 1e-6", sym <= 1e-6, "max dev " + num(sym));
  } else {
    gate("protocol closure H(0) = H(t)", false, "reversed-protocol gates need a closed protocol");
  }

  // The heat statistics must violate the detailed ratio; the gate asserts the
  // violation is present.
  double heat_dev = std::numeric_limits<double>::quiet_NaN();
  if (heat.at_m(1) > cfg.counting.p_floor && heat.at_m(-1) > cfg.counting.p_floor) {
    heat_dev = std::abs(std::log(heat.at_m(1) / heat.at_m(-1)) - beta * spacing);
  }
  gate("heat violates the detailed ratio", std::isfinite(heat_dev) && heat_dev >= 0.1,
       "deviation " + num(heat_dev));

  json j{{"schema_version", kSchemaVersion},
         {"jarzynski_residual", jarz},
         {"heat_ratio_deviation", heat_dev},
         {"failures", failures}};
  write_json(out_dir / "check_ft.json", j);
  return failures == 0 ? 0 : 1;
}

}  // namespace qfcs_cli
