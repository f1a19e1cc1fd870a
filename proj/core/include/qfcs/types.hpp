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

#ifndef QFCS_TYPES_HPP
#define QFCS_TYPES_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qfcs {

using Complex = std::complex<double>;

// Dense square complex matrix over a D-dimensional Hilbert space
// (Hamiltonians, jump operators, density matrices).
using OperatorMatrix = Eigen::MatrixXcd;

// D^2 x D^2 complex matrix acting on column-stacked density matrices.
using SuperOperator = Eigen::MatrixXcd;

using ComplexVector = Eigen::VectorXcd;

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

// Mismatched or invalid operator dimensions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A stated operation precondition does not hold for the given inputs.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The numerical procedure failed to converge or produced an invalid result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Liouvillian kernel is not one-dimensional; reports the dimension found.
class DegenerateKernelError : public NumericalError {
 public:
  DegenerateKernelError(int kernel_dim, const std::string& what)
      : NumericalError(what), kernel_dim_(kernel_dim) {}
  int kernel_dim() const { return kernel_dim_; }

 private:
  int kernel_dim_;
};

}  // namespace qfcs

#endif  // QFCS_TYPES_HPP
