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

#ifndef QFCS_LIOUVILLE_HPP
#define QFCS_LIOUVILLE_HPP

#include <vector>

#include "qfcs/model.hpp"
#include "qfcs/types.hpp"

namespace qfcs {

// Counting fields u_k indexed by channel counting tag. Conjugate to energy;
// complex values are allowed (integral fluctuation checks evaluate at u = i beta).
struct CountingField {
  std::vector<Complex> values;

  CountingField() = default;
  explicit CountingField(std::vector<Complex> v) : values(std::move(v)) {}

  static CountingField zero(int n = 1) { return CountingField(std::vector<Complex>(n, 0.0)); }
  static CountingField uniform(Complex u, int n = 1) { return CountingField(std::vector<Complex>(n, u)); }

  int size() const { return static_cast<int>(values.size()); }
  Complex at(int tag) const;
};

// The counting-field-dressed generator
//   A_u(t)[rho] = -i[H(t), rho]
//     + sum_j { G- e^{i u_j nu_j} S rho S^dag + G+ e^{-i u_j nu_j} S^dag rho S
//               - G-/2 {S^dag S, rho} - G+/2 {S S^dag, rho} },
// with G+ = e^{-beta nu_j} G-. The time-reversed variant flips the commutator
// sign and keeps the dissipator.
//
// Precomputes the dressed channel factors once per (model, u); apply() then
// evaluates A_u(t)[rho] with plain matrix products. Instances hold scratch
// buffers, so share models across threads but not generator instances.
class DressedGenerator {
 public:
  DressedGenerator(const SystemModel& model, const CountingField& u, bool time_reversed);

  int dim() const { return dim_; }

  // out = A_u(t)[rho]
  void apply(double t, const OperatorMatrix& rho, OperatorMatrix& out);

  // Dense D^2 x D^2 matrix of A_u(t).
  SuperOperator matrix(double t) const;

  void hamiltonian_at(double t, OperatorMatrix& h) const;

 private:
  int dim_;
  Complex commutator_sign_;  // -i forward, +i reversed
  const SystemModel* model_;
  struct Channel {
    OperatorMatrix s, s_dag;
    Complex f_minus, f_plus;  // dressed jump weights
  };
  std::vector<Channel> channels_;
  OperatorMatrix damping_;  // sum_j (G- S^dag S + G+ S S^dag)/2
  OperatorMatrix h_buf_, t1_;
};

// Dense A_u(t) of the forward evolution.
SuperOperator assemble(const SystemModel& model, const CountingField& u, double t);

// Same dissipator, +i[H, .] commutator.
SuperOperator assemble_time_reversed(const SystemModel& model, const CountingField& u, double t);

// Unique unit-trace Hermitian null vector of A_0 for a static model.
// Throws DegenerateKernelError when the kernel is not one-dimensional and
// NumericalError when positivity fails beyond -1e-9.
OperatorMatrix stationary_state(const SystemModel& model);

}  // namespace qfcs

#endif  // QFCS_LIOUVILLE_HPP
