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

#include "catghz/state.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace catghz {

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("StateVector::basis: index outside dimension");
  StateVector s(dim);
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize a zero vector");
  return StateVector(amps_ / n);
}

cd StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("StateVector::inner: dimension mismatch");
  return amps_.dot(other.amps_);
}

DensityMatrix::DensityMatrix(RowMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("density matrix must be square");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(RowMatrix(psi.amplitudes() * psi.amplitudes().adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(RowMatrix(RowMatrix::Identity(n, n) / static_cast<double>(dim)));
}

double DensityMatrix::hermiticity_error() const {
  if (m_.size() == 0) return 0.0;
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd h = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return m_.squaredNorm();
}

cd DensityMatrix::expectation(const StateVector& psi) const {
  if (psi.dim() != dim()) throw std::invalid_argument("expectation: dimension mismatch");
  return psi.amplitudes().dot(m_ * psi.amplitudes());
}

cd DensityMatrix::expectation(const SparseOperator& op) const {
  if (op.dim() != dim()) throw std::invalid_argument("expectation: dimension mismatch");
  cd acc{};
  for (const auto& e : op.entries()) {
    acc += e.value * m_(static_cast<Eigen::Index>(e.col), static_cast<Eigen::Index>(e.row));
  }
  return acc;
}

void DensityMatrix::symmetrize() {
  const auto n = m_.rows();
  constexpr Eigen::Index kTile = 32;
  for (Eigen::Index i = 0; i < n; ++i) m_(i, i) = cd(m_(i, i).real(), 0.0);
  // Tiled so the transposed reads stay in cache.
  for (Eigen::Index i0 = 0; i0 < n; i0 += kTile) {
    for (Eigen::Index j0 = i0; j0 < n; j0 += kTile) {
      for (Eigen::Index i = i0; i < std::min(n, i0 + kTile); ++i) {
        for (Eigen::Index j = std::max(j0, i + 1); j < std::min(n, j0 + kTile); ++j) {
          const cd avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
          m_(i, j) = avg;
          m_(j, i) = std::conj(avg);
        }
      }
    }
  }
}

DensityMatrix DensityMatrix::conjugated(const SparseOperator& u) const {
  if (u.dim() != dim()) throw std::invalid_argument("conjugated: dimension mismatch");
  const auto n = m_.rows();
  // t = U rho, row by row
  RowMatrix t = RowMatrix::Zero(n, n);
  for (const auto& e : u.entries()) {
    t.row(static_cast<Eigen::Index>(e.row)) += e.value * m_.row(static_cast<Eigen::Index>(e.col));
  }
  // out = t U^dagger: out(:, r) += t(:, c) conj(u_rc)
  RowMatrix out = RowMatrix::Zero(n, n);
  for (const auto& e : u.entries()) {
    out.col(static_cast<Eigen::Index>(e.row)) += std::conj(e.value) * t.col(static_cast<Eigen::Index>(e.col));
  }
  return DensityMatrix(std::move(out));
}

void DensityMatrix::validate(double trace_tol, double herm_tol, double eig_tol) const {
  std::ostringstream err;
  if (trace_drift() > trace_tol) err << "trace " << trace() << " deviates from 1 by more than " << trace_tol << "; ";
  if (const double h = hermiticity_error(); h > herm_tol) err << "Hermiticity error " << h << "; ";
  if (const double ev = min_eigenvalue(); ev < -eig_tol) err << "minimum eigenvalue " << ev << "; ";
  if (!err.str().empty()) throw std::domain_error("invalid density matrix: " + err.str());
}

}  // namespace catghz
