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

#include "qfcs/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfcs/linop.hpp"

namespace qfcs {

namespace {
constexpr Complex kI{0.0, 1.0};

double drive_time(const DriveTerm& d, double t) {
  return d.stop_time ? std::min(t, *d.stop_time) : t;
}
}  // namespace

SystemModel::SystemModel(OperatorMatrix static_hamiltonian, std::vector<DriveTerm> drives,
                         std::vector<JumpChannel> channels, double beta,
                         std::vector<std::string> warnings)
    : static_hamiltonian_(std::move(static_hamiltonian)),
      drives_(std::move(drives)),
      channels_(std::move(channels)),
      beta_(beta),
      warnings_(std::move(warnings)) {
  const Eigen::Index d = static_hamiltonian_.rows();
  if (d != static_hamiltonian_.cols()) {
    throw DimensionError("SystemModel: Hamiltonian must be square");
  }
  if (beta_ < 0) throw PreconditionError("SystemModel: beta must be >= 0");
  if (hermiticity_error(static_hamiltonian_) > 1e-12 * std::max(1.0, static_hamiltonian_.cwiseAbs().maxCoeff())) {
    throw PreconditionError("SystemModel: static Hamiltonian is not Hermitian");
  }
  for (const auto& drv : drives_) {
    if (drv.op.rows() != d || drv.op.cols() != d) {
      throw DimensionError("SystemModel: drive operator dimension mismatch");
    }
  }
  for (const auto& ch : channels_) {
    if (ch.lowering_op.rows() != d || ch.lowering_op.cols() != d) {
      throw DimensionError("SystemModel: jump operator dimension mismatch");
    }
    if (ch.transition_energy <= 0) {
      throw PreconditionError("SystemModel: transition energy must be positive");
    }
    if (ch.down_rate < 0) throw PreconditionError("SystemModel: negative rate");
    if (ch.counting_tag < 0) throw PreconditionError("SystemModel: negative counting tag");
  }
}

double SystemModel::up_rate(const JumpChannel& ch) const {
  if (zero_temperature()) return 0.0;
  return std::exp(-beta_ * ch.transition_energy) * ch.down_rate;
}

OperatorMatrix SystemModel::hamiltonian_at(double t) const {
  OperatorMatrix h = static_hamiltonian_;
  for (const auto& d : drives_) {
    const double td = drive_time(d, t);
    if (d.form == DriveForm::kCosine) {
      h += d.amplitude * std::cos(d.frequency * td + d.phase) * d.op;
    } else {
      const Complex ph = std::exp(-kI * (d.frequency * td + d.phase));
      h += d.amplitude * (ph * d.op + std::conj(ph) * d.op.adjoint());
    }
  }
  return h;
}

int SystemModel::counting_dim() const {
  int m = 0;
  for (const auto& ch : channels_) m = std::max(m, ch.counting_tag + 1);
  return m;
}

double SystemModel::max_rate() const {
  double m = 0;
  for (const auto& ch : channels_) m = std::max(m, ch.down_rate + up_rate(ch));
  return m;
}

std::optional<double> SystemModel::min_drive_period() const {
  std::optional<double> p;
  for (const auto& d : drives_) {
    if (d.frequency <= 0) continue;
    const double period = 2.0 * std::numbers::pi / d.frequency;
    p = p ? std::min(*p, period) : period;
  }
  return p;
}

double SystemModel::hamiltonian_norm_bound() const {
  double n = static_hamiltonian_.cwiseAbs().maxCoeff() * dim();
  for (const auto& d : drives_) {
    const double on = d.op.cwiseAbs().maxCoeff() * dim();
    n += std::abs(d.amplitude) * (d.form == DriveForm::kRotating ? 2.0 : 1.0) * on;
  }
  return n;
}

OperatorMatrix pauli_x() {
  OperatorMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

OperatorMatrix pauli_y() {
  OperatorMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

OperatorMatrix pauli_z() {
  OperatorMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

OperatorMatrix qubit_lowering() { return (pauli_x() - kI * pauli_y()) / 2.0; }

OperatorMatrix annihilation(int n_fock) {
  if (n_fock < 2) throw PreconditionError("annihilation: need at least 2 levels");
  OperatorMatrix a = OperatorMatrix::Zero(n_fock, n_fock);
  for (int n = 1; n < n_fock; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

SystemModel build_driven_qubit(double nu, double omega, double omega_d,
                               double gamma_minus, double beta,
                               std::optional<double> drive_stop) {
  if (nu <= 0) throw PreconditionError("build_driven_qubit: nu must be positive");
  if (gamma_minus <= 0) throw PreconditionError("build_driven_qubit: rate must be positive");
  std::vector<DriveTerm> drives;
  if (omega != 0.0) {
    drives.push_back({pauli_x(), omega, omega_d, 0.0, DriveForm::kCosine, drive_stop});
  }
  std::vector<JumpChannel> chans{{qubit_lowering(), nu, gamma_minus, 0}};
  return SystemModel(nu / 2.0 * pauli_z(), std::move(drives), std::move(chans), beta);
}

SystemModel build_undriven_qubit(double nu, double gamma, double beta) {
  if (nu <= 0 || gamma <= 0) throw PreconditionError("build_undriven_qubit: nu, gamma must be positive");
  if (std::isinf(beta)) throw PreconditionError("build_undriven_qubit: beta must be finite");
  std::vector<JumpChannel> chans{{qubit_lowering(), nu, gamma, 0}};
  return SystemModel(nu / 2.0 * pauli_z(), {}, std::move(chans), beta);
}

SystemModel build_rwa_qubit(double omega, double delta, double gamma, double nu) {
  if (gamma <= 0) throw PreconditionError("build_rwa_qubit: gamma must be positive");
  OperatorMatrix h = (omega * pauli_x() + delta * pauli_z()) / 2.0;
  std::vector<JumpChannel> chans{{qubit_lowering(), nu, gamma, 0}};
  return SystemModel(std::move(h), {}, std::move(chans), kInfiniteBeta);
}

namespace {
std::vector<std::string> oscillator_truncation_warnings(double nu, double omega,
                                                        double omega_d, double gamma,
                                                        int n_fock) {
  std::vector<std::string> warnings;
  const double delta = nu - omega_d;
  const double alpha2 = 4.0 * omega * omega / (gamma * gamma + 4.0 * delta * delta);
  // Coherent-state tail: keep the mean plus several standard deviations.
  const double needed = alpha2 + 6.0 * std::sqrt(alpha2 + 1.0) + 2.0;
  if (n_fock < needed) {
    warnings.push_back("oscillator truncation n_fock=" + std::to_string(n_fock) +
                       " may be too small for steady coherent occupation |alpha|^2=" +
                       std::to_string(alpha2));
  }
  return warnings;
}
}  // namespace

SystemModel build_harmonic_oscillator(double nu, double omega, double omega_d,
                                      double gamma, int n_fock) {
  if (nu <= 0 || gamma <= 0) throw PreconditionError("build_harmonic_oscillator: nu, gamma must be positive");
  if (n_fock < 2) throw PreconditionError("build_harmonic_oscillator: n_fock must be >= 2");
  const OperatorMatrix a = annihilation(n_fock);
  OperatorMatrix h = nu * (a.adjoint() * a);
  std::vector<DriveTerm> drives{{a.adjoint(), omega, omega_d, 0.0, DriveForm::kRotating, std::nullopt}};
  std::vector<JumpChannel> chans{{a, nu, gamma, 0}};
  return SystemModel(std::move(h), std::move(drives), std::move(chans), kInfiniteBeta,
                     oscillator_truncation_warnings(nu, omega, omega_d, gamma, n_fock));
}

SystemModel build_rwa_oscillator(double nu, double omega, double omega_d,
                                 double gamma, int n_fock) {
  if (nu <= 0 || gamma <= 0) throw PreconditionError("build_rwa_oscillator: nu, gamma must be positive");
  if (n_fock < 2) throw PreconditionError("build_rwa_oscillator: n_fock must be >= 2");
  const OperatorMatrix a = annihilation(n_fock);
  OperatorMatrix h = (nu - omega_d) * (a.adjoint() * a) + omega * (a + a.adjoint());
  std::vector<JumpChannel> chans{{a, nu, gamma, 0}};
  return SystemModel(std::move(h), {}, std::move(chans), kInfiniteBeta,
                     oscillator_truncation_warnings(nu, omega, omega_d, gamma, n_fock));
}

SystemModel build_coupled_qubits(double omega, double omega_xx, double gamma, double nu) {
  if (gamma <= 0) throw PreconditionError("build_coupled_qubits: gamma must be positive");
  const OperatorMatrix id = OperatorMatrix::Identity(2, 2);
  const OperatorMatrix sx1 = kron(pauli_x(), id), sx2 = kron(id, pauli_x());
  const OperatorMatrix sy1 = kron(pauli_y(), id), sy2 = kron(id, pauli_y());
  // omega_xx (s+1 s-2 + h.c.) written as omega_xx/2 (sx sx + sy sy).
  OperatorMatrix h = omega / 2.0 * (sx1 + sx2) +
                     omega_xx / 2.0 * (sx1 * sx2 + sy1 * sy2);
  std::vector<JumpChannel> chans{
      {kron(qubit_lowering(), id), nu, gamma, 0},
      {kron(id, qubit_lowering()), nu, gamma, 1},
  };
  return SystemModel(std::move(h), {}, std::move(chans), kInfiniteBeta);
}

SystemModel build_three_level(double rabi, double gamma) {
  if (rabi <= 0 || gamma <= 0) throw PreconditionError("build_three_level: rabi, gamma must be positive");
  OperatorMatrix h = OperatorMatrix::Zero(3, 3);
  h(0, 0) = -rabi / 2.0;
  h(1, 1) = rabi / 2.0;
  OperatorMatrix s = OperatorMatrix::Zero(3, 3);
  s(0, 2) = kI * std::sqrt(gamma / 2.0);
  s(1, 2) = kI * std::sqrt(gamma / 2.0);
  s(2, 0) = kI * std::sqrt(gamma);
  s(2, 1) = -kI * std::sqrt(gamma);
  // Rates live inside the jump operator here; the channel rate is 1.
  std::vector<JumpChannel> chans{{std::move(s), 1.0, 1.0, 0}};
  return SystemModel(std::move(h), {}, std::move(chans), kInfiniteBeta);
}

}  // namespace qfcs
