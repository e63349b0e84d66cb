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
#include <cstddef>

#include "catghz/sparse_operator.h"

namespace catghz {

// Transmon qutrit levels.
enum class Level { g = 0, e = 1, f = 2 };

char level_name(Level level);

constexpr int kNumCavities = 3;
constexpr std::size_t kQutritDim = 3;

struct BasisState {
  Level qutrit = Level::g;
  std::array<int, kNumCavities> photons{};

  bool operator==(const BasisState&) const = default;
};

// Composite space qutrit (x) cavity1 (x) cavity2 (x) cavity3. Cavity l keeps
// Fock levels 0..truncation(l). The flat index is row-major with the qutrit
// as the slowest factor:
//   idx = ((q*(N1+1) + n1)*(N2+1) + n2)*(N3+1) + n3
class SpaceLayout {
 public:
  explicit SpaceLayout(std::array<int, kNumCavities> truncations);

  // Cavities are numbered 1..3 throughout the public API.
  int truncation(int cavity) const;
  std::size_t cavity_dim(int cavity) const { return static_cast<std::size_t>(truncation(cavity)) + 1; }
  const std::array<int, kNumCavities>& truncations() const { return truncations_; }
  std::size_t total_dim() const { return total_dim_; }

  std::size_t index(const BasisState& s) const;
  std::size_t index(Level q, int n1, int n2, int n3) const { return index({q, {n1, n2, n3}}); }
  BasisState state(std::size_t index) const;

  // Embeds single-factor operators; identity is used for an empty factor.
  SparseOperator embed(const SparseOperator* qutrit_op,
                       const std::array<const SparseOperator*, kNumCavities>& cavity_ops) const;

  bool operator==(const SpaceLayout& o) const { return truncations_ == o.truncations_; }

 private:
  std::array<int, kNumCavities> truncations_;
  std::size_t total_dim_;
};

SpaceLayout build_layout(std::array<int, kNumCavities> truncations);

void check_cavity(int cavity);

// Single-factor building blocks.
SparseOperator local_annihilation(int truncation);
SparseOperator local_qutrit(Level row, Level col);

// Operators on the composite space.
SparseOperator annihilation(const SpaceLayout& layout, int cavity);
SparseOperator creation(const SpaceLayout& layout, int cavity);
SparseOperator number_operator(const SpaceLayout& layout, int cavity);
// |lower><upper|; the adjoint is the raising operator.
SparseOperator qutrit_sigma(const SpaceLayout& layout, Level lower, Level upper);
SparseOperator qutrit_projector(const SpaceLayout& layout, Level level);
// Operator acting only on one cavity factor.
SparseOperator embed_cavity(const SpaceLayout& layout, int cavity, const SparseOperator& op);

}  // namespace catghz
