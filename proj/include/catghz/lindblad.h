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

#include <string>
#include <vector>

#include "catghz/hamiltonian.h"
#include "catghz/params.h"
#include "catghz/state.h"

namespace catghz {

struct Channel {
  SparseOperator op;
  double rate = 0.0;  // 1/us
  std::string label;
};

// Collapse channels L[xi] = xi rho xi+ - {xi+ xi, rho}/2 and pure-dephasing
// channels on the projectors |e><e|, |f><f| (same form, xi = sigma_jj).
struct DissipatorSet {
  std::vector<Channel> collapse;
  std::vector<Channel> dephasing;

  bool empty() const;
};

DissipatorSet build_dissipators(const SystemParams& params, const SpaceLayout& layout);

// Generator plus dissipators compiled for repeated evaluation of
//   d rho/dt = -i[H(t), rho] + sum_k rate_k L[xi_k](rho).
// Writing K = H - (i/2) sum rate xi+ xi, the right-hand side is
//   A + A^dagger + sum rate xi rho xi+,   A = -i K rho,
// so only one sparse-times-dense product per evaluation is needed. Holds
// scratch buffers: one instance per concurrent evolution.
class MasterEquation {
 public:
  MasterEquation(const Generator& h, const DissipatorSet& d);

  std::size_t dim() const { return dim_; }
  bool has_jumps() const { return !jumps_.empty(); }
  // Max |omega| of the Hamiltonian phases, rad/us.
  double max_frequency() const { return max_frequency_; }
  // Gershgorin-type bound on the generator's spectral radius, 1/us.
  double rate_bound() const { return rate_bound_; }

  void derivative(const RowMatrix& rho, double t, RowMatrix& out) const;
  // -i H(t) psi; the dissipators are ignored.
  void schrodinger(const Eigen::VectorXcd& psi, double t, Eigen::VectorXcd& out) const;

 private:
  struct Contribution {
    std::size_t pos;
    std::size_t term;
    cd base;
    bool conjugate;
  };
  struct Segment {
    std::size_t row;
    std::size_t col;
    std::size_t length;
    std::size_t weight;  // offset into conj_weights
  };
  struct Jump {
    double rate = 0.0;
    std::vector<SparseOperator::Entry> entries;
    std::vector<Segment> segments;
    std::vector<cd> conj_weights;
  };

  static Jump make_jump(const SparseOperator& op, double rate);

  void evaluate(double t, bool with_damping) const;

  std::size_t dim_;
  std::vector<std::size_t> row_start_;
  std::vector<std::size_t> col_;
  std::vector<cd> static_hamiltonian_;  // values of time-independent Hermitian part
  std::vector<cd> damping_;             // -(i/2) sum rate xi+ xi
  std::vector<Contribution> contributions_;
  std::vector<double> omegas_;
  std::vector<Jump> jumps_;
  double max_frequency_ = 0.0;
  double rate_bound_ = 0.0;

  mutable std::vector<cd> values_;
  mutable std::vector<cd> phases_;
  mutable RowMatrix product_;
};

// One evaluation of the master-equation right-hand side.
DensityMatrix rhs(const Generator& h, const DissipatorSet& d, const DensityMatrix& rho, double t);

}  // namespace catghz
