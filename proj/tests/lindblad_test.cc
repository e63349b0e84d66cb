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

#include <cmath>

#include <gtest/gtest.h>

namespace catghz {
namespace {

using Dense = Eigen::MatrixXcd;

// -i[H, rho] + sum rate (x rho x+ - {x+ x, rho}/2), dense.
Dense reference_rhs(const Dense& h, const DissipatorSet& d, const Dense& rho) {
  Dense out = cd{0.0, -1.0} * (h * rho - rho * h);
  for (const auto* set : {&d.collapse, &d.dephasing}) {
    for (const auto& c : *set) {
      const Dense x = c.op.to_dense();
      const Dense xdx = x.adjoint() * x;
      out += c.rate * (x * rho * x.adjoint() - 0.5 * (xdx * rho + rho * xdx));
    }
  }
  return out;
}

Dense random_state(Eigen::Index dim, unsigned seed) {
  std::srand(seed);
  Dense m = Dense::Random(dim, dim);
  m = m * m.adjoint();
  return m / m.trace();
}

DissipatorSet single_channel(const SparseOperator& op, double rate) {
  DissipatorSet d;
  d.collapse.push_back({op, rate, "test"});
  return d;
}

TEST(BuildDissipators, PaperRates) {
  const SpaceLayout layout({1, 1, 1});
  const DissipatorSet d = build_dissipators(SystemParams{}, layout);
  ASSERT_EQ(d.collapse.size(), 6u);
  ASSERT_EQ(d.dephasing.size(), 2u);
  EXPECT_DOUBLE_EQ(d.collapse[0].rate, 1.0 / 300);
  EXPECT_DOUBLE_EQ(d.collapse[3].rate, 1.0 / 60);
  EXPECT_DOUBLE_EQ(d.collapse[4].rate, 1.0 / 30);
  EXPECT_DOUBLE_EQ(d.collapse[5].rate, 1.0 / 150);
  EXPECT_DOUBLE_EQ(d.dephasing[0].rate, 1.0 / 20);
  EXPECT_DOUBLE_EQ(d.dephasing[1].rate, 1.0 / 20);
  EXPECT_FALSE(d.empty());
}

TEST(BuildDissipators, ZeroAndNegativeRates) {
  SystemParams p;
  p.kappa_per_us = {0, 0, 0};
  p.gamma_eg_per_us = p.gamma_fe_per_us = p.gamma_fg_per_us = 0.0;
  p.gamma_phi_e_per_us = p.gamma_phi_f_per_us = 0.0;
  const SpaceLayout layout({1, 1, 1});
  const DissipatorSet d = build_dissipators(p, layout);
  EXPECT_TRUE(d.empty());

  const Generator h = hamiltonian_full(with_designed_couplings(SystemParams{}), layout, true);
  const Dense rho = random_state(24, 3);
  const Dense expected = reference_rhs(h.at(0.01).to_dense(), DissipatorSet{}, rho);
  EXPECT_LT((rhs(h, d, DensityMatrix(RowMatrix(rho)), 0.01).matrix() - expected).cwiseAbs().maxCoeff(), 1e-12);

  p.kappa_per_us[1] = -1.0;
  EXPECT_THROW(build_dissipators(p, layout), ConstraintError);
  EXPECT_THROW(MasterEquation(h, single_channel(annihilation(layout, 1), -0.1)), std::invalid_argument);
}

TEST(Rhs, MatchesDenseReference) {
  // Dimensions below and above the column block width of the kernel.
  for (auto n : {std::array<int, 3>{1, 1, 1}, {2, 2, 3}, {3, 3, 3}}) {
    const SystemParams p = with_designed_couplings(SystemParams{});
    const SpaceLayout layout(n);
    const Generator h = hamiltonian_full(p, layout, true);
    const DissipatorSet d = build_dissipators(p, layout);
    const Dense rho = random_state(static_cast<Eigen::Index>(layout.total_dim()), 11);
    for (double t : {0.0, 0.0371}) {
      const RowMatrix out = rhs(h, d, DensityMatrix(RowMatrix(rho)), t).matrix();
      const Dense ref = reference_rhs(h.at(t).to_dense(), d, rho);
      EXPECT_LT((Dense(out) - ref).cwiseAbs().maxCoeff(), 1e-12 * ref.cwiseAbs().maxCoeff()) << layout.total_dim();
      EXPECT_LT(std::abs(out.trace()), 1e-12 * ref.cwiseAbs().maxCoeff());
      EXPECT_LT((out - out.adjoint()).cwiseAbs().maxCoeff(), 1e-12 * ref.cwiseAbs().maxCoeff());
    }
  }
}

TEST(Rhs, ComplexJumpOperator) {
  const SpaceLayout layout({1, 1, 1});
  const SparseOperator x = annihilation(layout, 2).scaled(cd{0.6, 0.8}) + qutrit_sigma(layout, Level::g, Level::f);
  const DissipatorSet d = single_channel(x, 0.7);
  const Generator h(24);
  const Dense rho = random_state(24, 5);
  const Dense ref = reference_rhs(Dense::Zero(24, 24), d, rho);
  EXPECT_LT((rhs(h, d, DensityMatrix(RowMatrix(rho)), 0.0).matrix() - ref).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Rhs, MaximallyMixedIsTraceless) {
  const SpaceLayout layout({2, 2, 2});
  const auto out = rhs(Generator(layout.total_dim()), single_channel(annihilation(layout, 1), 0.5),
                       DensityMatrix::maximally_mixed(layout.total_dim()), 0.0);
  EXPECT_LT(std::abs(out.trace()), 1e-15);
}

TEST(Rhs, PhotonDecaySlope) {
  const SpaceLayout layout({2, 2, 2});
  const double kappa = 0.25;
  const auto rho = DensityMatrix::pure(StateVector::basis(layout.total_dim(), layout.index(Level::g, 1, 0, 0)));
  const auto out = rhs(Generator(layout.total_dim()), single_channel(annihilation(layout, 1), kappa), rho, 0.0);
  EXPECT_NEAR(out.expectation(number_operator(layout, 1)).real(), -kappa, 1e-15);
}

TEST(Rhs, DephasingDecaysCoherenceAtHalfRate) {
  const SpaceLayout layout({1, 1, 1});
  const double gamma = 0.05;
  DissipatorSet d;
  d.dephasing.push_back({qutrit_projector(layout, Level::e), gamma, "phi_e"});
  const std::size_t g = layout.index(Level::g, 0, 0, 0);
  const std::size_t e = layout.index(Level::e, 0, 0, 0);
  RowMatrix m = RowMatrix::Zero(24, 24);
  m(g, g) = m(e, e) = 0.5;
  m(g, e) = m(e, g) = 0.5;
  const auto out = rhs(Generator(24), d, DensityMatrix(m), 0.0);
  EXPECT_NEAR(out(g, e).real(), -0.5 * gamma * 0.5, 1e-16);
  EXPECT_EQ(out(g, g), cd{});
  EXPECT_EQ(out(e, e), cd{});
}

TEST(Rhs, DimensionMismatch) {
  EXPECT_THROW(rhs(Generator(24), DissipatorSet{}, DensityMatrix::maximally_mixed(8), 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace catghz
