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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace catghz {

using cd = std::complex<double>;

// Complex sparse matrix in sorted coordinate form. Entries are ordered by
// (row, col), duplicates are summed and exact zeros dropped at construction.
// Instances are immutable once built.
class SparseOperator {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    cd value;
  };

  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim);
  SparseOperator(std::size_t dim, std::vector<Entry> entries);

  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(std::span<const cd> values);
  static SparseOperator from_dense(const Eigen::MatrixXcd& m, double drop_below = 0.0);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }
  // Entries of row r; valid because entries are row-sorted.
  std::span<const Entry> row(std::size_t r) const;

  cd at(std::size_t row, std::size_t col) const;
  bool is_diagonal() const;

  SparseOperator adjoint() const;
  SparseOperator scaled(cd factor) const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  Eigen::MatrixXcd to_dense() const;

  // Largest |A - A^dagger| element.
  double hermiticity_error() const;

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(cd factor, const SparseOperator& a) { return a.scaled(factor); }

 private:
  void finalize();

  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_start_;  // size dim_ + 1
};

SparseOperator kron(const SparseOperator& a, const SparseOperator& b);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

// Largest element magnitude; 0 for an empty operator.
double max_abs(const SparseOperator& a);

}  // namespace catghz
