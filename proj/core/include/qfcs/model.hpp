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

#ifndef QFCS_MODEL_HPP
#define QFCS_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "qfcs/types.hpp"

namespace qfcs {

enum class DriveForm {
  // amplitude * cos(frequency*t + phase) * op, with op Hermitian.
  kCosine,
  // amplitude * (op * e^{-i(frequency*t + phase)} + op^dagger * e^{+i(...)}).
  kRotating,
};

struct DriveTerm {
  OperatorMatrix op;
  double amplitude = 0.0;
  double frequency = 0.0;
  double phase = 0.0;
  DriveForm form = DriveForm::kCosine;
  // If set, the drive coefficient is frozen at its stop_time value for t beyond
  // it (switch-off protocols that leave the Hamiltonian constant afterwards).
  std::optional<double> stop_time;
};

struct JumpChannel {
  OperatorMatrix lowering_op;
  double transition_energy = 1.0;  // nu_j > 0, sets the counted heat quantum
  double down_rate = 0.0;          // Gamma_-; the up rate is always derived
  int counting_tag = 0;            // index into the counting field
};

// Time-dependent Hamiltonian protocol, jump channels and inverse temperature.
// Immutable after construction; shareable across threads.
class SystemModel {
 public:
  SystemModel(OperatorMatrix static_hamiltonian, std::vector<DriveTerm> drives,
              std::vector<JumpChannel> channels, double beta,
              std::vector<std::string> warnings = {});

  int dim() const { return static_cast<int>(static_hamiltonian_.rows()); }
  double beta() const { return beta_; }
  bool zero_temperature() const { return std::isinf(beta_); }
  bool is_static() const { return drives_.empty(); }

  const OperatorMatrix& static_hamiltonian() const { return static_hamiltonian_; }
  const std::vector<DriveTerm>& drives() const { return drives_; }
  const std::vector<JumpChannel>& channels() const { return channels_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Gamma_+ = e^{-beta nu} Gamma_-; exactly 0 at the zero-temperature flag.
  double up_rate(const JumpChannel& ch) const;

  OperatorMatrix hamiltonian_at(double t) const;

  // 1 + max counting tag over channels.
  int counting_dim() const;

  double max_rate() const;
  // Shortest drive period, or nullopt for static models.
  std::optional<double> min_drive_period() const;
  // Cheap bound on sup_t ||H(t)||.
  double hamiltonian_norm_bound() const;

 private:
  OperatorMatrix static_hamiltonian_;
  std::vector<DriveTerm> drives_;
  std::vector<JumpChannel> channels_;
  double beta_;
  std::vector<std::string> warnings_;
};

// Pauli matrices in the basis (excited, ground) with sigma_z = diag(1, -1),
// so (sigma_x - i sigma_y)/2 lowers the +nu/2 level into the -nu/2 one.
OperatorMatrix pauli_x();
OperatorMatrix pauli_y();
OperatorMatrix pauli_z();
OperatorMatrix qubit_lowering();
// Truncated annihilation operator on n_fock levels.
OperatorMatrix annihilation(int n_fock);

// H(t) = nu sigma_z/2 + Omega cos(omega_d t) sigma_x, one emission channel at
// transition energy nu. drive_stop freezes the drive coefficient after that
// time (the switch-off measurement protocol).
SystemModel build_driven_qubit(double nu, double omega, double omega_d,
                               double gamma_minus, double beta,
                               std::optional<double> drive_stop = std::nullopt);

// H = nu sigma_z/2, no drive, finite temperature.
SystemModel build_undriven_qubit(double nu, double gamma, double beta);

// Rotating-frame qubit H = (Omega sigma_x + delta sigma_z)/2, zero temperature.
// nu is carried as channel metadata: heat quanta are counted in units of the
// lab-frame level spacing even though it does not appear in the RWA Hamiltonian.
SystemModel build_rwa_qubit(double omega, double delta, double gamma, double nu = 1.0);

// Lab-frame oscillator H(t) = nu a^dag a + Omega (a^dag e^{-i w_d t} + a e^{i w_d t}),
// channel S = a, zero temperature.
SystemModel build_harmonic_oscillator(double nu, double omega, double omega_d,
                                      double gamma, int n_fock);

// Rotating-frame oscillator H = (nu - omega_d) a^dag a + Omega (a + a^dag):
// the static generator whose dominant eigenvalue carries the long-time heat
// statistics of the driven oscillator.
SystemModel build_rwa_oscillator(double nu, double omega, double omega_d,
                                 double gamma, int n_fock);

// Two resonantly driven qubits with exchange coupling
//   H = Omega/2 (sx1 + sx2) + omega_xx (s+1 s-2 + s-1 s+2),
// separate emission channels with distinct counting tags, zero temperature.
// omega_xx is the 01 <-> 10 flip-flop matrix element; with this normalization
// the spectrum is {0, [wxx -+ sqrt(4 Omega^2 + wxx^2)]/2, -wxx} and the lowest
// splitting is Omega_R = Omega^2/omega_xx for omega_xx >> Omega.
SystemModel build_coupled_qubits(double omega, double omega_xx, double gamma,
                                 double nu = 1.0);

// Three-level reduction of the coupled-qubit pair: H = diag(-rabi/2, rabi/2, 0)
// and a single jump operator with entries (1,3) = (2,3) = i sqrt(gamma/2),
// (3,1) = -(3,2) = i sqrt(gamma). The rate is folded into the operator, so the
// channel down_rate is 1.
SystemModel build_three_level(double rabi, double gamma);

}  // namespace qfcs

#endif  // QFCS_MODEL_HPP
