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

#pragma once

#include <Eigen/Dense>

#include "catghz/sparse_operator.h"
#include "catghz/state.h"

namespace catghz {

constexpr std::size_t kExpmMaxDim = 1000;

// exp(m) by scaling and squaring with a Taylor core.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

// exp(-i H t) psi for a constant Hamiltonian, computed densely. Used to
// validate the time integrators; dimension is capped at kExpmMaxDim.
StateVector expm_oracle(const SparseOperator& h, double t, const StateVector& psi);

}  // namespace catghz
