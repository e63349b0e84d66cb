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

#include <cstddef>

#include <Eigen/Dense>

#include "catghz/sparse_operator.h"

namespace catghz {

using RowMatrix = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim))) {}
  explicit StateVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) {}

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  cd operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }
  // Throws if the norm is zero.
  StateVector normalized() const;
  // <this|other>
  cd inner(const StateVector& other) const;

  StateVector applied(const SparseOperator& op) const { return StateVector(op.apply(amps_)); }

 private:
  Eigen::VectorXcd amps_;
};

// Dense density matrix, row-major so that sparse-times-dense kernels stream
// contiguous rows.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(std::size_t dim)
      : m_(RowMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim))) {}
  explicit DensityMatrix(RowMatrix m);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const RowMatrix& matrix() const { return m_; }
  RowMatrix& matrix() { return m_; }
  cd operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  cd trace() const { return m_.trace(); }
  double trace_drift() const { return std::abs(trace() - cd{1.0}); }
  double hermiticity_error() const;
  double min_eigenvalue() const;
  double purity() const;
  // <psi|rho|psi>
  cd expectation(const StateVector& psi) const;
  // tr(A rho)
  cd expectation(const SparseOperator& op) const;

  void symmetrize();
  // U rho U^dagger
  DensityMatrix conjugated(const SparseOperator& u) const;

  // Validates trace, Hermiticity and positivity at the stated tolerances.
  void validate(double trace_tol = 1e-8, double herm_tol = 1e-10, double eig_tol = 1e-8) const;

 private:
  RowMatrix m_;
};

}  // namespace catghz
