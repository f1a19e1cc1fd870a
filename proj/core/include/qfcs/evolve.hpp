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

#ifndef QFCS_EVOLVE_HPP
#define QFCS_EVOLVE_HPP

#include <optional>
#include <span>
#include <vector>

#include "qfcs/liouville.hpp"
#include "qfcs/model.hpp"
#include "qfcs/types.hpp"

namespace qfcs {

// rho(t, u): generally non-Hermitian and non-unit-trace away from u = 0.
struct CountingState {
  OperatorMatrix matrix;
  CountingField u;
  double t = 0.0;
};

struct GFSample {
  CountingField u;
  double t = 0.0;
  Complex value;
};

struct PropagationOptions {
  // Fixed step override; when absent, default_time_step(model) is used as the
  // starting step.
  std::optional<double> dt;
  bool reversed = false;
  // A step size is accepted only once halving it changes the result by less
  // than this (max-abs over the sampled states).
  double convergence_tol = 1e-8;
  int max_halvings = 8;
};

// dt = min(T_drive/200, 0.01/Gamma_max, 0.02/||H||).
double default_time_step(const SystemModel& model);

// Gibbs state of the full H(0), drive term included at its t=0 value.
OperatorMatrix initial_equilibrium(const SystemModel& model);

// Classical fixed-step 4th-order integration of d rho/dt = A_u(t)[rho]
// (or the time-reversed ordering: d sigma/ds = A^tr_u(t_final - s)[sigma]).
// The step is halved until the step-doubling gate passes; throws
// NumericalError on non-convergence.
CountingState propagate(const SystemModel& model, const CountingField& u, double t_final,
                        const OperatorMatrix& initial, const PropagationOptions& opts = {});

// States at each time of an ascending grid, one trajectory.
std::vector<OperatorMatrix> propagate_sampled(const SystemModel& model, const CountingField& u,
                                              std::span<const double> t_grid,
                                              const OperatorMatrix& initial,
                                              const PropagationOptions& opts = {});

// G_w(u,t) = Tr[e^{i u H(t)} rho(t,u)] with rho(0,u) = e^{-i u H(0)} rho_0 and
// rho_0 the equilibrium of H(0). When snap_spacing is set, the two-point
// boundary factors use spectra moved to the nearest lattice point relative to
// the ground energy of H(0); the dressed propagation itself is untouched.
// This accumulates the O(Omega^2/nu^2) drive offsets of the measured energies
// onto their nearest bin and makes the sampled G exactly lattice-periodic.
GFSample generating_function_work(const SystemModel& model, Complex u, double t,
                                  const PropagationOptions& opts = {},
                                  std::optional<double> snap_spacing = std::nullopt);

// G_Q(u,t) = Tr rho(t,u) with the undressed equilibrium initial state.
GFSample generating_function_heat(const SystemModel& model, const CountingField& u, double t,
                                  const PropagationOptions& opts = {});
GFSample generating_function_heat(const SystemModel& model, Complex u, double t,
                                  const PropagationOptions& opts = {});

// Work generating function of the time-reversed protocol: reversed ordering,
// equilibrium initial state at the protocol end, measurement factors swapped.
GFSample generating_function_work_reversed(const SystemModel& model, Complex u, double t,
                                           const PropagationOptions& opts = {},
                                           std::optional<double> snap_spacing = std::nullopt);

// One trajectory, G sampled at every grid time.
std::vector<Complex> work_gf_time_series(const SystemModel& model, Complex u,
                                         std::span<const double> t_grid,
                                         const PropagationOptions& opts = {},
                                         std::optional<double> snap_spacing = std::nullopt);
std::vector<Complex> heat_gf_time_series(const SystemModel& model, const CountingField& u,
                                         std::span<const double> t_grid,
                                         const PropagationOptions& opts = {});

}  // namespace qfcs

#endif  // QFCS_EVOLVE_HPP
