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

#ifndef QFCS_LONGTIME_HPP
#define QFCS_LONGTIME_HPP

#include <span>
#include <string>
#include <vector>

#include "qfcs/liouville.hpp"
#include "qfcs/model.hpp"
#include "qfcs/types.hpp"

namespace qfcs {

// Taylor coefficients of the dominant Liouvillian eigenvalue at u = 0:
//   lambda1 = -i d lambda/du_j |_0       (mean heat current per channel)
//   lambda2 = -d^2 lambda/du_j^2 |_0     (variance rate per channel)
//   lambda12 = -d^2 lambda/du_1 du_2 |_0 (cross-channel covariance rate)
struct CumulantSet {
  double nu = 1.0;
  std::vector<double> lambda1_ch;
  std::vector<double> lambda2_ch;
  double lambda12 = 0.0;

  int channels() const { return static_cast<int>(lambda1_ch.size()); }
  double lambda1() const { return lambda1_ch.at(0); }
  double lambda2() const { return lambda2_ch.at(0); }

  // Fano factor of the summed (double-channel) counting statistics.
  double fano() const;
  // Per-channel Fano factor lambda2/(nu lambda1); for two identical qubits this
  // equals 2 sigma_{Q1}^2 / (nu <Q>).
  double fano_single() const;
  // Heat covariance C12(t) = lambda12 * t.
  double c12(double t) const { return lambda12 * t; }
};

// Iterative dominant-eigenvalue perturbation for a static model: the
// stationary state fixes the zeroth order, trace projection onto the left null
// vector gives each solvability condition, and the trace-zero pseudo-inverse
// solve supplies the state corrections. The mixed coefficient is extracted by
// polarization through the same solvability conditions.
CumulantSet cumulant_expansion(const SystemModel& model);

// Eigenvalue of assemble(model, u) with the largest real part (dense solve).
Complex dominant_eigenvalue_numeric(const SystemModel& model, const CountingField& u);
Complex dominant_eigenvalue_numeric(const SystemModel& model, Complex u);

// Quantum-regression two-time intensity correlation on an ascending t grid:
// collapse the stationary state with the selected channels, propagate with
// A_0, detect with the summed intensity, normalize by the stationary intensity
// squared. Empty selection means all channels.
std::vector<double> g2_correlator(const SystemModel& model, std::span<const double> t_grid,
                                  std::span<const int> channel_selection = {});

struct SweepPoint {
  double omega = 0.0;
  double omega_xx = 0.0;
  double fano_double = 0.0;
  double fano_single = 0.0;
  double c12_rate = 0.0;  // lambda12 / (nu^2 Gamma)
  bool entangled = false;  // omega_xx > omega^2 / (2 Gamma)
  bool ok = false;
  std::string error;
};

// Coupled-qubit grid sweep; per-point failures are recorded and the sweep
// continues. Deterministic output order (row-major over omegas x omega_xxs).
std::vector<SweepPoint> sweep_fano(std::span<const double> omegas,
                                   std::span<const double> omega_xxs, double gamma,
                                   int threads = 0);

}  // namespace qfcs

#endif  // QFCS_LONGTIME_HPP
