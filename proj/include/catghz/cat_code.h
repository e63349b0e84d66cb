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

#include <array>

#include <Eigen/Dense>

#include "catghz/fock_space.h"
#include "catghz/state.h"

namespace catghz {

enum class CatSign { plus, minus };

// 1/sqrt(2(1 +- exp(-2 alpha^2))), the factor that makes
// N(|alpha> +- |-alpha>) unit norm. Requires alpha > 0.
double cat_normalization(double alpha, CatSign sign);

// Two-component cat code in a single cavity: |0_L> is the even cat
// N+(|alpha> + |-alpha>), |1_L> the odd cat N-(|alpha> - |-alpha>).
class CatCode {
 public:
  CatCode(double alpha, int n_max);

  double alpha() const { return alpha_; }
  int n_max() const { return n_max_; }
  double norm_plus() const { return norm_plus_; }
  double norm_minus() const { return norm_minus_; }

  // Closed-form Fock coefficient C_n of the logical state; zero when the
  // parity of n does not match the bit.
  double coefficient(int bit, int n) const;
  // Fraction of the logical state's weight above Fock level `truncation`.
  double tail_mass(int bit, int truncation) const;

  const Eigen::VectorXd& logical0() const { return logical0_; }
  const Eigen::VectorXd& logical1() const { return logical1_; }

 private:
  double alpha_;
  int n_max_;
  double norm_plus_;
  double norm_minus_;
  Eigen::VectorXd logical0_;
  Eigen::VectorXd logical1_;
};

// Closed-form coefficient vector of |bit_L> on Fock levels 0..code.n_max().
const Eigen::VectorXd& logical_state(const CatCode& code, int bit);

// Logical states restricted to Fock levels 0..truncation and renormalized, so
// that they form an orthonormal pair inside the truncated cavity. Throws if
// the discarded tail mass exceeds 1e-6.
std::array<Eigen::VectorXd, 2> truncated_logical_basis(const CatCode& code, int truncation);

// |g> (x) |b1_L> |b2_L> |b3_L>
StateVector logical_product(const CatCode& code, const SpaceLayout& layout, std::array<int, 3> bits);

// Qutrit in |g>, every cavity in (|0_L> + |1_L>)/sqrt(2).
StateVector prepare_initial(const CatCode& code, const SpaceLayout& layout);

// Unitary acting on the code subspace of one cavity as
//   (|0_L>+|1_L>)/sqrt(2) -> |0_L>,  (|0_L>-|1_L>)/sqrt(2) -> |1_L>
// and as the identity on the orthogonal complement of span{|0_L>, |1_L>}.
SparseOperator code_hadamard(const SpaceLayout& layout, const CatCode& code, int cavity);

// (|0_L 0_L 0_L> + |1_L 1_L 1_L>)/sqrt(2) (x) |g>
StateVector ghz_target(const CatCode& code, const SpaceLayout& layout);

// State reached by the entangling evolution before the final rotations:
// [|0_L>(|0_L>+|1_L>)(|0_L>+|1_L>) + |1_L>(|0_L>-|1_L>)(|0_L>-|1_L>)] / (2 sqrt 2), qutrit in |g>.
StateVector pre_rotation_target(const CatCode& code, const SpaceLayout& layout);

}  // namespace catghz
