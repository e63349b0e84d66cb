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

#include "catghz/sparse_operator.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace catghz {

SparseOperator::SparseOperator(std::size_t dim) : dim_(dim) { finalize(); }

SparseOperator::SparseOperator(std::size_t dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.row >= dim_ || e.col >= dim_) {
      throw std::out_of_range("SparseOperator: entry (" + std::to_string(e.row) + ", " +
                              std::to_string(e.col) + ") outside dimension " +
                              std::to_string(dim_));
    }
  }
  finalize();
}

void SparseOperator::finalize() {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == cd{}; });
  entries_ = std::move(merged);

  row_start_.assign(dim_ + 1, 0);
  for (const auto& e : entries_) ++row_start_[e.row + 1];
  for (std::size_t r = 0; r < dim_; ++r) row_start_[r + 1] += row_start_[r];
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  std::vector<Entry> e;
  e.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) e.push_back({i, i, 1.0});
  return SparseOperator(dim, std::move(e));
}

SparseOperator SparseOperator::diagonal(std::span<const cd> values) {
  std::vector<Entry> e;
  e.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) e.push_back({i, i, values[i]});
  return SparseOperator(values.size(), std::move(e));
}

SparseOperator SparseOperator::from_dense(const Eigen::MatrixXcd& m, double drop_below) {
  if (m.rows() != m.cols()) throw std::invalid_argument("from_dense: matrix must be square");
  std::vector<Entry> e;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > drop_below) {
        e.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), m(r, c)});
      }
    }
  }
  return SparseOperator(static_cast<std::size_t>(m.rows()), std::move(e));
}

std::span<const SparseOperator::Entry> SparseOperator::row(std::size_t r) const {
  return std::span<const Entry>(entries_).subspan(row_start_[r], row_start_[r + 1] - row_start_[r]);
}

cd SparseOperator::at(std::size_t r, std::size_t c) const {
  auto cells = row(r);
  auto it = std::lower_bound(cells.begin(), cells.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != cells.end() && it->col == c) ? it->value : cd{};
}

bool SparseOperator::is_diagonal() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.row == e.col; });
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<Entry> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back({x.col, x.row, std::conj(x.value)});
  return SparseOperator(dim_, std::move(e));
}

SparseOperator SparseOperator::scaled(cd factor) const {
  std::vector<Entry> e = entries_;
  for (auto& x : e) x.value *= factor;
  return SparseOperator(dim_, std::move(e));
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& v) const {
  if (static_cast<std::size_t>(v.size()) != dim_) {
    throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const auto& e : entries_) out[e.row] += e.value * v[e.col];
  return out;
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& e : entries_) m(e.row, e.col) += e.value;
  return m;
}

double SparseOperator::hermiticity_error() const {
  double worst = 0.0;
  for (const auto& e : entries_) {
    worst = std::max(worst, std::abs(e.value - std::conj(at(e.col, e.row))));
  }
  return worst;
}

namespace {

void check_same_dim(const SparseOperator& a, const SparseOperator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  check_same_dim(a, b, "operator+");
  std::vector<SparseOperator::Entry> e(a.entries().begin(), a.entries().end());
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return SparseOperator(a.dim(), std::move(e));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  return a + b.scaled(-1.0);
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  check_same_dim(a, b, "operator*");
  std::vector<SparseOperator::Entry> e;
  for (const auto& x : a.entries()) {
    for (const auto& y : b.row(x.col)) e.push_back({x.row, y.col, x.value * y.value});
  }
  return SparseOperator(a.dim(), std::move(e));
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
  const std::size_t n = b.dim();
  std::vector<SparseOperator::Entry> e;
  e.reserve(a.nnz() * b.nnz());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      e.push_back({x.row * n + y.row, x.col * n + y.col, x.value * y.value});
    }
  }
  return SparseOperator(a.dim() * n, std::move(e));
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

double max_abs(const SparseOperator& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e.value));
  return m;
}

}  // namespace catghz
