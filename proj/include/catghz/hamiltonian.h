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

#include "catghz/fock_space.h"
#include "catghz/params.h"

namespace catghz {

// One contribution to a time-dependent Hamiltonian. A paired term
// contributes op e^{i omega t} + h.c.; an unpaired term must be a Hermitian
// constant (omega = 0) and contributes op as is.
struct GeneratorTerm {
  SparseOperator op;
  double omega = 0.0;  // rad/us
  bool paired = true;
  std::string label;
};

// H(t) = sum_k terms_k(t). Hermitian at every t by construction.
class Generator {
 public:
  explicit Generator(std::size_t dim) : dim_(dim) {}

  void add_paired(SparseOperator op, double omega, std::string label);
  void add_static(SparseOperator op, std::string label);

  std::size_t dim() const { return dim_; }
  const std::vector<GeneratorTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  SparseOperator at(double t) const;
  // Largest |omega| over all terms, rad/us.
  double max_frequency() const;

 private:
  std::size_t dim_;
  std::vector<GeneratorTerm> terms_;
};

// Interaction-picture Hamiltonian
//   g1 (e^{i|d1|t} a1+ s_eg- + h.c.) + sum_{l=2,3} g_l (e^{-i|d_l|t} a_l+ s_fe- + h.c.)
// and with `include_errors` the unwanted qutrit couplings and the inter-cavity
// crosstalk.
Generator hamiltonian_full(const SystemParams& params, const SpaceLayout& layout, bool include_errors);

enum class EffectiveLevel { stark, kerr, diagonal };

EffectiveLevel parse_effective_level(const std::string& tag);

// Dispersive effective Hamiltonians. `stark` keeps the photon-number Stark
// shifts, cavity 2-3 exchange and the two-photon f<->g coupling; `kerr`
// replaces the latter by the cross-Kerr terms; `diagonal` keeps only the
// ground-manifold part lambda1 n1 |g><g| - sum chi_1l n1 n_l |g><g|.
Generator hamiltonian_effective(const SystemParams& params, const SpaceLayout& layout, EffectiveLevel level,
                                bool include_crosstalk);

// The crosstalk line alone: sum over pairs g_kl (e^{-i D~_kl t} a_k a_l+ + h.c.).
void add_crosstalk(Generator& h, const SystemParams& params, const SpaceLayout& layout, const Detunings& d);

// exp(-i lambda1 n1 t + i chi12 n1 n2 t + i chi13 n1 n3 t) on the |g>
// manifold, identity on |e> and |f>. Rates in MHz, t in us.
SparseOperator analytic_unitary(const EffectiveRates& rates, const SpaceLayout& layout, double t);

}  // namespace catghz
