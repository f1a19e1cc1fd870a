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

#ifndef QFCS_TEST_HELPERS_HPP
#define QFCS_TEST_HELPERS_HPP

#include <random>

#include "qfcs/types.hpp"

namespace qfcs::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20260809);
  return gen;
}

inline OperatorMatrix random_matrix(int d) {
  std::normal_distribution<double> dist;
  OperatorMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = Complex(dist(rng()), dist(rng()));
  }
  return m;
}

inline OperatorMatrix random_hermitian(int d) {
  OperatorMatrix m = random_matrix(d);
  return 0.5 * (m + m.adjoint()).eval();
}

inline OperatorMatrix random_density(int d) {
  OperatorMatrix m = random_matrix(d);
  OperatorMatrix rho = m * m.adjoint();
  rho /= rho.trace();
  return rho;
}

inline double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qfcs::testing

#endif  // QFCS_TEST_HELPERS_HPP
