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

#include "catghz/fock_space.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catghz {

char level_name(Level level) {
  switch (level) {
    case Level::g: return 'g';
    case Level::e: return 'e';
    case Level::f: return 'f';
  }
  return '?';
}

void check_cavity(int cavity) {
  if (cavity < 1 || cavity > kNumCavities) {
    throw std::out_of_range("cavity index must be in 1..3, got " + std::to_string(cavity));
  }
}

namespace {

void check_level(Level level) {
  const int v = static_cast<int>(level);
  if (v < 0 || v > 2) throw std::out_of_range("qutrit level out of range");
}

}  // namespace

SpaceLayout::SpaceLayout(std::array<int, kNumCavities> truncations) : truncations_(truncations) {
  total_dim_ = kQutritDim;
  for (int l = 0; l < kNumCavities; ++l) {
    if (truncations_[l] < 1) {
      throw std::invalid_argument("Fock truncation of cavity " + std::to_string(l + 1) +
                                  " must be >= 1, got " + std::to_string(truncations_[l]));
    }
    total_dim_ *= static_cast<std::size_t>(truncations_[l]) + 1;
  }
}

int SpaceLayout::truncation(int cavity) const {
  check_cavity(cavity);
  return truncations_[cavity - 1];
}

std::size_t SpaceLayout::index(const BasisState& s) const {
  check_level(s.qutrit);
  std::size_t idx = static_cast<std::size_t>(s.qutrit);
  for (int l = 0; l < kNumCavities; ++l) {
    if (s.photons[l] < 0 || s.photons[l] > truncations_[l]) {
      throw std::out_of_range("photon number " + std::to_string(s.photons[l]) + " outside cavity " +
                              std::to_string(l + 1) + " truncation");
    }
    idx = idx * (static_cast<std::size_t>(truncations_[l]) + 1) + static_cast<std::size_t>(s.photons[l]);
  }
  return idx;
}

BasisState SpaceLayout::state(std::size_t index) const {
  if (index >= total_dim_) throw std::out_of_range("basis index outside layout");
  BasisState s;
  for (int l = kNumCavities - 1; l >= 0; --l) {
    const std::size_t d = static_cast<std::size_t>(truncations_[l]) + 1;
    s.photons[l] = static_cast<int>(index % d);
    index /= d;
  }
  s.qutrit = static_cast<Level>(index);
  return s;
}

SparseOperator SpaceLayout::embed(
    const SparseOperator* qutrit_op,
    const std::array<const SparseOperator*, kNumCavities>& cavity_ops) const {
  SparseOperator result = qutrit_op ? *qutrit_op : SparseOperator::identity(kQutritDim);
  if (result.dim() != kQutritDim) throw std::invalid_argument("embed: qutrit operator must be 3x3");
  for (int l = 0; l < kNumCavities; ++l) {
    const std::size_t d = static_cast<std::size_t>(truncations_[l]) + 1;
    if (cavity_ops[l] && cavity_ops[l]->dim() != d) {
      throw std::invalid_argument("embed: cavity " + std::to_string(l + 1) + " operator has wrong dimension");
    }
    result = kron(result, cavity_ops[l] ? *cavity_ops[l] : SparseOperator::identity(d));
  }
  return result;
}

SpaceLayout build_layout(std::array<int, kNumCavities> truncations) { return SpaceLayout(truncations); }

SparseOperator local_annihilation(int truncation) {
  std::vector<SparseOperator::Entry> e;
  for (int n = 1; n <= truncation; ++n) {
    e.push_back({static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n), std::sqrt(static_cast<double>(n))});
  }
  return SparseOperator(static_cast<std::size_t>(truncation) + 1, std::move(e));
}

SparseOperator local_qutrit(Level row, Level col) {
  check_level(row);
  check_level(col);
  return SparseOperator(kQutritDim, {{static_cast<std::size_t>(row), static_cast<std::size_t>(col), 1.0}});
}

SparseOperator embed_cavity(const SpaceLayout& layout, int cavity, const SparseOperator& op) {
  check_cavity(cavity);
  std::array<const SparseOperator*, kNumCavities> ops{};
  ops[cavity - 1] = &op;
  return layout.embed(nullptr, ops);
}

SparseOperator annihilation(const SpaceLayout& layout, int cavity) {
  return embed_cavity(layout, cavity, local_annihilation(layout.truncation(cavity)));
}

SparseOperator creation(const SpaceLayout& layout, int cavity) {
  return annihilation(layout, cavity).adjoint();
}

SparseOperator number_operator(const SpaceLayout& layout, int cavity) {
  const int n = layout.truncation(cavity);
  std::vector<cd> diag(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) diag[k] = static_cast<double>(k);
  return embed_cavity(layout, cavity, SparseOperator::diagonal(diag));
}

SparseOperator qutrit_sigma(const SpaceLayout& layout, Level lower, Level upper) {
  if (lower == upper) {
    throw std::invalid_argument(std::string("qutrit_sigma: levels must differ (got ") + level_name(lower) +
                                "); use qutrit_projector");
  }
  const SparseOperator q = local_qutrit(lower, upper);
  return layout.embed(&q, {});
}

SparseOperator qutrit_projector(const SpaceLayout& layout, Level level) {
  const SparseOperator q = local_qutrit(level, level);
  return layout.embed(&q, {});
}

}  // namespace catghz
