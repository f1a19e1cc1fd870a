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

#include "qfcs/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "qfcs/linop.hpp"

namespace qfcs {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Rk4Workspace {
  OperatorMatrix k1, k2, k3, k4, tmp;
  explicit Rk4Workspace(int d) : k1(d, d), k2(d, d), k3(d, d), k4(d, d), tmp(d, d) {}
};

// Generator evaluation time: forward runs use s directly, reversed runs walk
// the protocol backwards from t_final.
inline double gen_time(bool reversed, double t_final, double s) {
  return reversed ? t_final - s : s;
}

void rk4_segment(DressedGenerator& gen, bool reversed, double t_final, OperatorMatrix& rho,
                 double s0, double s1, long nsteps, Rk4Workspace& ws) {
  const double h = (s1 - s0) / double(nsteps);
  double s = s0;
  for (long i = 0; i < nsteps; ++i) {
    gen.apply(gen_time(reversed, t_final, s), rho, ws.k1);
    ws.tmp = rho + (h / 2.0) * ws.k1;
    gen.apply(gen_time(reversed, t_final, s + h / 2.0), ws.tmp, ws.k2);
    ws.tmp = rho + (h / 2.0) * ws.k2;
    gen.apply(gen_time(reversed, t_final, s + h / 2.0), ws.tmp, ws.k3);
    ws.tmp = rho + h * ws.k3;
    gen.apply(gen_time(reversed, t_final, s + h), ws.tmp, ws.k4);
    rho += (h / 6.0) * (ws.k1 + 2.0 * ws.k2 + 2.0 * ws.k3 + ws.k4);
    s = s0 + double(i + 1) * h;
  }
}

std::vector<OperatorMatrix> run_trajectory(DressedGenerator& gen, bool reversed,
                                           std::span<const double> grid,
                                           const OperatorMatrix& initial, double dt) {
  const double t_final = grid.empty() ? 0.0 : grid.back();
  Rk4Workspace ws(gen.dim());
  OperatorMatrix rho = initial;
  std::vector<OperatorMatrix> out;
  out.reserve(grid.size());
  double s_prev = 0.0;
  for (double s : grid) {
    if (s < s_prev) throw PreconditionError("propagate: time grid must be ascending");
    if (s > s_prev) {
      const long n = std::max<long>(1, long(std::ceil((s - s_prev) / dt)));
      rk4_segment(gen, reversed, t_final, rho, s_prev, s, n, ws);
    }
    out.push_back(rho);
    s_prev = s;
  }
  return out;
}

double max_state_diff(const std::vector<OperatorMatrix>& a, const std::vector<OperatorMatrix>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, (a[i] - b[i]).cwiseAbs().maxCoeff());
  }
  return m;
}

std::vector<OperatorMatrix> propagate_converged(const SystemModel& model, const CountingField& u,
                                                std::span<const double> grid,
                                                const OperatorMatrix& initial,
                                                const PropagationOptions& opts) {
  if (initial.rows() != model.dim() || initial.cols() != model.dim()) {
    throw DimensionError("propagate: initial state dimension mismatch");
  }
  for (double s : grid) {
    if (s < 0.0) throw PreconditionError("propagate: negative time");
  }
  DressedGenerator gen(model, u, opts.reversed);
  double dt = opts.dt.value_or(default_time_step(model));
  if (!(dt > 0.0)) throw PreconditionError("propagate: time step must be positive");

  auto coarse = run_trajectory(gen, opts.reversed, grid, initial, dt);
  for (int halving = 0; halving <= opts.max_halvings; ++halving) {
    dt /= 2.0;
    auto fine = run_trajectory(gen, opts.reversed, grid, initial, dt);
    if (max_state_diff(coarse, fine) < opts.convergence_tol) return fine;
    coarse = std::move(fine);
  }
  throw NumericalError("propagate: step halving did not converge to " +
                       std::to_string(opts.convergence_tol));
}

}  // namespace

double default_time_step(const SystemModel& model) {
  double dt = std::numeric_limits<double>::infinity();
  if (auto period = model.min_drive_period()) dt = std::min(dt, *period / 200.0);
  const double gmax = model.max_rate();
  if (gmax > 0) dt = std::min(dt, 0.01 / gmax);
  const double hnorm = model.hamiltonian_norm_bound();
  if (hnorm > 0) dt = std::min(dt, 0.02 / hnorm);
  if (!std::isfinite(dt)) dt = 0.01;
  return dt;
}

OperatorMatrix initial_equilibrium(const SystemModel& model) {
  return gibbs_state(model.hamiltonian_at(0.0), model.beta());
}

CountingState propagate(const SystemModel& model, const CountingField& u, double t_final,
                        const OperatorMatrix& initial, const PropagationOptions& opts) {
  if (t_final < 0) throw PreconditionError("propagate: t_final must be >= 0");
  const double grid[1] = {t_final};
  auto states = propagate_converged(model, u, grid, initial, opts);
  return CountingState{std::move(states.front()), u, t_final};
}

std::vector<OperatorMatrix> propagate_sampled(const SystemModel& model, const CountingField& u,
                                              std::span<const double> t_grid,
                                              const OperatorMatrix& initial,
                                              const PropagationOptions& opts) {
  return propagate_converged(model, u, t_grid, initial, opts);
}

namespace {

// Boundary measurement factors, optionally with the spectrum accumulated onto
// the lattice anchored at the ground energy of H(0).
struct BoundaryFactors {
  OperatorMatrix h0, ht;
  BoundaryFactors(const SystemModel& model, double t, std::optional<double> snap) {
    h0 = model.hamiltonian_at(0.0);
    ht = model.hamiltonian_at(t);
    if (snap) {
      const double ref = min_eigenvalue_hermitian(h0);
      h0 = snap_spectrum(h0, *snap, ref);
      ht = snap_spectrum(ht, *snap, ref);
    }
  }
};

}  // namespace

GFSample generating_function_work(const SystemModel& model, Complex u, double t,
                                  const PropagationOptions& opts,
                                  std::optional<double> snap_spacing) {
  if (opts.reversed) throw PreconditionError("generating_function_work: use the _reversed variant");
  const BoundaryFactors bf(model, t, snap_spacing);
  const OperatorMatrix rho0 = initial_equilibrium(model);
  const OperatorMatrix init = hermitian_exponential_factor(bf.h0, -kI * u) * rho0;
  const CountingField uf = CountingField::uniform(u, std::max(1, model.counting_dim()));
  CountingState cs = propagate(model, uf, t, init, opts);
  const Complex value = (hermitian_exponential_factor(bf.ht, kI * u) * cs.matrix).trace();
  return GFSample{uf, t, value};
}

GFSample generating_function_heat(const SystemModel& model, const CountingField& u, double t,
                                  const PropagationOptions& opts) {
  const OperatorMatrix rho0 = initial_equilibrium(model);
  CountingState cs = propagate(model, u, t, rho0, opts);
  return GFSample{u, t, cs.matrix.trace()};
}

GFSample generating_function_heat(const SystemModel& model, Complex u, double t,
                                  const PropagationOptions& opts) {
  return generating_function_heat(model, CountingField::uniform(u, std::max(1, model.counting_dim())),
                                  t, opts);
}

GFSample generating_function_work_reversed(const SystemModel& model, Complex u, double t,
                                           const PropagationOptions& opts,
                                           std::optional<double> snap_spacing) {
  const BoundaryFactors bf(model, t, snap_spacing);
  // Physical equilibrium of the true end-point Hamiltonian; only the
  // measurement factors use the snapped spectra.
  const OperatorMatrix rho0t = gibbs_state(model.hamiltonian_at(t), model.beta());
  const OperatorMatrix init = hermitian_exponential_factor(bf.ht, -kI * u) * rho0t;
  PropagationOptions ro = opts;
  ro.reversed = true;
  const CountingField uf = CountingField::uniform(u, std::max(1, model.counting_dim()));
  CountingState cs = propagate(model, uf, t, init, ro);
  const Complex value = (hermitian_exponential_factor(bf.h0, kI * u) * cs.matrix).trace();
  return GFSample{uf, t, value};
}

std::vector<Complex> work_gf_time_series(const SystemModel& model, Complex u,
                                         std::span<const double> t_grid,
                                         const PropagationOptions& opts,
                                         std::optional<double> snap_spacing) {
  const OperatorMatrix h0 = model.hamiltonian_at(0.0);
  const double ref = min_eigenvalue_hermitian(h0);
  const OperatorMatrix h0b = snap_spacing ? snap_spectrum(h0, *snap_spacing, ref) : h0;
  const OperatorMatrix rho0 = initial_equilibrium(model);
  const OperatorMatrix init = hermitian_exponential_factor(h0b, -kI * u) * rho0;
  const CountingField uf = CountingField::uniform(u, std::max(1, model.counting_dim()));
  auto states = propagate_sampled(model, uf, t_grid, init, opts);
  std::vector<Complex> out(states.size());
  for (size_t i = 0; i < states.size(); ++i) {
    OperatorMatrix ht = model.hamiltonian_at(t_grid[i]);
    if (snap_spacing) ht = snap_spectrum(ht, *snap_spacing, ref);
    out[i] = (hermitian_exponential_factor(ht, kI * u) * states[i]).trace();
  }
  return out;
}

std::vector<Complex> heat_gf_time_series(const SystemModel& model, const CountingField& u,
                                         std::span<const double> t_grid,
                                         const PropagationOptions& opts) {
  const OperatorMatrix rho0 = initial_equilibrium(model);
  auto states = propagate_sampled(model, u, t_grid, rho0, opts);
  std::vector<Complex> out(states.size());
  for (size_t i = 0; i < states.size(); ++i) out[i] = states[i].trace();
  return out;
}

}  // namespace qfcs
