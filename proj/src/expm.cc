// Copyright 2026 The catghz Authors
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

#include "catghz/expm.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catghz {

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: matrix must be square");
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Eigen::MatrixXcd a = m / std::ldexp(1.0, squarings);

  // ||a|| <= 1/2, so 30 terms reach far below double precision
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  Eigen::MatrixXcd term = result;
  for (int k = 1; k <= 30; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

StateVector expm_oracle(const SparseOperator& h, double t, const StateVector& psi) {
  if (h.dim() > kExpmMaxDim) {
    throw std::invalid_argument("expm_oracle: dimension " + std::to_string(h.dim()) + " exceeds cap " +
                                std::to_string(kExpmMaxDim));
  }
  if (h.dim() != psi.dim()) throw std::invalid_argument("expm_oracle: dimension mismatch");
  const Eigen::MatrixXcd u = expm(cd(0.0, -t) * h.to_dense());
  return StateVector(u * psi.amplitudes());
}

}  // namespace catghz
