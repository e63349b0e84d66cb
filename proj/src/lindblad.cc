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

#include "catghz/lindblad.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kernels.h"

namespace catghz {

bool DissipatorSet::empty() const {
  auto zero = [](const Channel& c) { return c.rate == 0.0; };
  return std::all_of(collapse.begin(), collapse.end(), zero) && std::all_of(dephasing.begin(), dephasing.end(), zero);
}

DissipatorSet build_dissipators(const SystemParams& p, const SpaceLayout& layout) {
  validate(p);
  DissipatorSet d;
  for (int l = 1; l <= 3; ++l) {
    d.collapse.push_back({annihilation(layout, l), p.kappa_per_us[l - 1], "kappa" + std::to_string(l)});
  }
  d.collapse.push_back({qutrit_sigma(layout, Level::g, Level::e), p.gamma_eg_per_us, "gamma_eg"});
  d.collapse.push_back({qutrit_sigma(layout, Level::e, Level::f), p.gamma_fe_per_us, "gamma_fe"});
  d.collapse.push_back({qutrit_sigma(layout, Level::g, Level::f), p.gamma_fg_per_us, "gamma_fg"});
  d.dephasing.push_back({qutrit_projector(layout, Level::e), p.gamma_phi_e_per_us, "gamma_phi_e"});
  d.dephasing.push_back({qutrit_projector(layout, Level::f), p.gamma_phi_f_per_us, "gamma_phi_f"});
  return d;
}

MasterEquation::MasterEquation(const Generator& h, const DissipatorSet& d) : dim_(h.dim()) {
  struct Damped {
    const Channel* channel;
    SparseOperator xdx;
  };
  std::vector<Damped> damped;
  for (const auto* channels : {&d.collapse, &d.dephasing}) {
    for (const auto& ch : *channels) {
      if (ch.rate < 0.0) throw std::invalid_argument("dissipator " + ch.label + " has negative rate");
      if (ch.op.dim() != dim_) throw std::invalid_argument("dissipator " + ch.label + " dimension mismatch");
      if (ch.rate > 0.0) damped.push_back({&ch, ch.op.adjoint() * ch.op});
    }
  }

  // Sparsity pattern: union of every term, its adjoint, the diagonal and
  // every xi+ xi.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  auto touch = [&](std::size_t r, std::size_t c) { slot.emplace(std::make_pair(r, c), 0); };
  for (std::size_t i = 0; i < dim_; ++i) touch(i, i);
  for (const auto& term : h.terms()) {
    for (const auto& e : term.op.entries()) {
      touch(e.row, e.col);
      if (term.paired) touch(e.col, e.row);
    }
  }
  for (const auto& dc : damped) {
    for (const auto& e : dc.xdx.entries()) touch(e.row, e.col);
  }
  row_start_.assign(dim_ + 1, 0);
  col_.reserve(slot.size());
  std::size_t pos = 0;
  for (auto& [rc, index] : slot) {
    index = pos++;
    ++row_start_[rc.first + 1];
    col_.push_back(rc.second);
  }
  for (std::size_t r = 0; r < dim_; ++r) row_start_[r + 1] += row_start_[r];

  static_hamiltonian_.assign(slot.size(), cd{});
  damping_.assign(slot.size(), cd{});
  for (const auto& term : h.terms()) {
    if (!term.paired) {
      for (const auto& e : term.op.entries()) static_hamiltonian_[slot.at({e.row, e.col})] += e.value;
      continue;
    }
    const std::size_t id = omegas_.size();
    omegas_.push_back(term.omega);
    max_frequency_ = std::max(max_frequency_, std::abs(term.omega));
    for (const auto& e : term.op.entries()) {
      contributions_.push_back({slot.at({e.row, e.col}), id, e.value, false});
      contributions_.push_back({slot.at({e.col, e.row}), id, std::conj(e.value), true});
    }
  }

  double jump_bound = 0.0;
  for (const auto& dc : damped) {
    const double rate = dc.channel->rate;
    for (const auto& e : dc.xdx.entries()) damping_[slot.at({e.row, e.col})] += cd(0.0, -0.5 * rate) * e.value;
    jumps_.push_back(make_jump(dc.channel->op, rate));
    jump_bound += rate * max_abs(dc.xdx);
  }

  // Row-sum bound on |H| (every term at unit phase) plus the dissipative part.
  std::vector<double> row_sum(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t p = row_start_[r]; p < row_start_[r + 1]; ++p) row_sum[r] += std::abs(static_hamiltonian_[p]);
  }
  for (const auto& c : contributions_) {
    const auto r = static_cast<std::size_t>(std::upper_bound(row_start_.begin(), row_start_.end(), c.pos) -
                                            row_start_.begin() - 1);
    row_sum[r] += std::abs(c.base);
  }
  rate_bound_ = 2.0 * (row_sum.empty() ? 0.0 : *std::max_element(row_sum.begin(), row_sum.end())) + 2.0 * jump_bound;

  values_.resize(slot.size());
  phases_.resize(omegas_.size());
  product_.resize(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
}

void MasterEquation::evaluate(double t, bool with_damping) const {
  for (std::size_t k = 0; k < omegas_.size(); ++k) phases_[k] = std::polar(1.0, omegas_[k] * t);
  if (with_damping) {
    for (std::size_t p = 0; p < values_.size(); ++p) values_[p] = static_hamiltonian_[p] + damping_[p];
  } else {
    std::copy(static_hamiltonian_.begin(), static_hamiltonian_.end(), values_.begin());
  }
  for (const auto& c : contributions_) {
    const cd ph = c.conjugate ? std::conj(phases_[c.term]) : phases_[c.term];
    values_[c.pos] += c.base * ph;
  }
}

MasterEquation::Jump MasterEquation::make_jump(const SparseOperator& op, double rate) {
  Jump jump;
  jump.rate = rate;
  jump.entries.assign(op.entries().begin(), op.entries().end());
  // Runs of entries whose row and column both advance by one.
  for (const auto& e : op.entries()) {
    const bool extends = !jump.segments.empty() && [&] {
      const auto& s = jump.segments.back();
      return e.row == s.row + s.length && e.col == s.col + s.length;
    }();
    if (extends) {
      ++jump.segments.back().length;
    } else {
      jump.segments.push_back({e.row, e.col, 1, jump.conj_weights.size()});
    }
    jump.conj_weights.push_back(std::conj(e.value));
  }
  return jump;
}

void MasterEquation::derivative(const RowMatrix& rho, double t, RowMatrix& out) const {
  const std::size_t n = dim_;
  if (static_cast<std::size_t>(rho.rows()) != n || static_cast<std::size_t>(rho.cols()) != n) {
    throw std::invalid_argument("MasterEquation::derivative: dimension mismatch");
  }
  out.resize(rho.rows(), rho.cols());
  evaluate(t, true);

  // product = K rho, one column block at a time so the block of rho stays
  // cache resident while every row of K is applied.
  using kernels::kBlock;
  const double* x = reinterpret_cast<const double*>(rho.data());
  const double* vals = reinterpret_cast<const double*>(values_.data());
  double* y = reinterpret_cast<double*>(product_.data());
  const std::size_t stride = 2 * n;
  for (std::size_t j0 = 0; j0 < n; j0 += kBlock) {
    const std::size_t width = std::min(kBlock, n - j0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t begin = row_start_[i];
      const std::size_t count = row_start_[i + 1] - begin;
      if (width == kBlock) {
        kernels::accumulate_block(vals + 2 * begin, col_.data() + begin, count, x + 2 * j0, stride,
                                  y + i * stride + 2 * j0);
      } else {
        kernels::accumulate_partial(vals + 2 * begin, col_.data() + begin, count, x + 2 * j0, stride,
                                    y + i * stride + 2 * j0, width);
      }
    }
  }

  // out = -i K rho + (-i K rho)^dagger, tiled for the transposed reads.
  double* o = reinterpret_cast<double*>(out.data());
  for (std::size_t i0 = 0; i0 < n; i0 += kBlock) {
    const std::size_t i1 = std::min(n, i0 + kBlock);
    for (std::size_t j0 = 0; j0 < n; j0 += kBlock) {
      const std::size_t j1 = std::min(n, j0 + kBlock);
      for (std::size_t i = i0; i < i1; ++i) {
        for (std::size_t j = j0; j < j1; ++j) {
          const double* aij = y + 2 * (i * n + j);
          const double* aji = y + 2 * (j * n + i);
          o[2 * (i * n + j)] = aij[1] + aji[1];
          o[2 * (i * n + j) + 1] = aji[0] - aij[0];
        }
      }
    }
  }

  // Quantum jumps: out[r1, r2] += rate xi[r1, c1] rho[c1, c2] conj(xi[r2, c2]).
  for (const auto& jump : jumps_) {
    const double* cw = reinterpret_cast<const double*>(jump.conj_weights.data());
    for (const auto& e1 : jump.entries) {
      const cd w1 = jump.rate * e1.value;
      double* orow = o + 2 * e1.row * n;
      const double* rrow = x + 2 * e1.col * n;
      for (const auto& seg : jump.segments) {
        kernels::weighted_axpy(w1.real(), w1.imag(), cw + 2 * seg.weight, rrow + 2 * seg.col, orow + 2 * seg.row,
                               seg.length);
      }
    }
  }
}

void MasterEquation::schrodinger(const Eigen::VectorXcd& psi, double t, Eigen::VectorXcd& out) const {
  if (static_cast<std::size_t>(psi.size()) != dim_) throw std::invalid_argument("schrodinger: dimension mismatch");
  evaluate(t, false);
  out.resize(psi.size());
  for (std::size_t i = 0; i < dim_; ++i) {
    cd acc{};
    for (std::size_t p = row_start_[i]; p < row_start_[i + 1]; ++p) acc += values_[p] * psi[col_[p]];
    out[i] = cd(acc.imag(), -acc.real());
  }
}

DensityMatrix rhs(const Generator& h, const DissipatorSet& d, const DensityMatrix& rho, double t) {
  if (h.dim() != rho.dim()) throw std::invalid_argument("rhs: dimension mismatch between generator and rho");
  const MasterEquation eq(h, d);
  RowMatrix out;
  eq.derivative(rho.matrix(), t, out);
  return DensityMatrix(std::move(out));
}

}  // namespace catghz
