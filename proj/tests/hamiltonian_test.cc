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


#include "catghz/hamiltonian.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "catghz/log.h"

namespace catghz {
namespace {

using Dense = Eigen::MatrixXcd;

const cd kI{0.0, 1.0};

// Dense reference operators built without the library's embedding code.
Dense kron4(const Dense& q, const Dense& c1, const Dense& c2, const Dense& c3) {
  auto kron = [](const Dense& a, const Dense& b) {
    Dense out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };
  return kron(kron(kron(q, c1), c2), c3);
}

Dense lower(int n) {
  Dense a = Dense::Zero(n + 1, n + 1);
  for (int k = 1; k <= n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Dense ket_bra(int r, int c) {
  Dense m = Dense::Zero(3, 3);
  m(r, c) = 1.0;
  return m;
}

struct Reference {
  std::array<int, 3> n;
  Dense id(int l) const { return Dense::Identity(n[l] + 1, n[l] + 1); }
  Dense cav(int l, const Dense& op) const {
    std::array<Dense, 3> f{id(0), id(1), id(2)};
    f[l] = op;
    return kron4(Dense::Identity(3, 3), f[0], f[1], f[2]);
  }
  Dense qut(const Dense& q) const { return kron4(q, id(0), id(1), id(2)); }
  Dense a(int l) const { return cav(l, lower(n[l])); }
};

double omega_ghz(double nu) { return 2.0 * M_PI * 1e3 * nu; }

Dense reference_full(const SystemParams& p, const std::array<int, 3>& n, double t) {
  const Reference r{n};
  const Dense s_eg = r.qut(ket_bra(0, 1));
  const Dense s_fe = r.qut(ket_bra(1, 2));
  Dense h = Dense::Zero(s_eg.rows(), s_eg.cols());
  auto add = [&](const Dense& op, double coupling_mhz, double omega) {
    const Dense x = 2.0 * M_PI * coupling_mhz * std::exp(kI * omega * t) * op;
    h += x + x.adjoint();
  };
  add(r.a(0).adjoint() * s_eg, p.g_mhz[0], omega_ghz(p.nu_c_ghz[0] - p.nu_eg_ghz));
  for (int l = 1; l < 3; ++l) add(r.a(l).adjoint() * s_fe, p.g_mhz[l], -omega_ghz(p.nu_fe_ghz - p.nu_c_ghz[l]));
  add(r.a(0) * s_fe.adjoint(), p.gt_mhz[0], -omega_ghz(p.nu_c_ghz[0] - p.nu_fe_ghz));
  for (int l = 1; l < 3; ++l) add(r.a(l) * s_eg.adjoint(), p.gt_mhz[l], omega_ghz(p.nu_eg_ghz - p.nu_c_ghz[l]));
  const double gx = p.crosstalk_ratio * std::max({p.g_mhz[0], p.g_mhz[1], p.g_mhz[2]});
  for (auto [k, l] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    add(r.a(k) * r.a(l).adjoint(), gx, -omega_ghz(p.nu_c_ghz[k] - p.nu_c_ghz[l]));
  }
  return h;
}

TEST(HamiltonianFull, MatchesDenseReference) {
  const SystemParams p = with_designed_couplings(SystemParams{});
  const std::array<int, 3> n{2, 1, 2};
  const SpaceLayout layout(n);
  const Generator h = hamiltonian_full(p, layout, true);
  for (double t : {0.0, 1.234e-4, 0.3}) {
    const Dense diff = h.at(t).to_dense() - reference_full(p, n, t);
    EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-9) << t;
  }
  EXPECT_NEAR(h.max_frequency(), omega_ghz(1.32), 1e-6);
}

TEST(HamiltonianFull, CouplingMatrixElements) {
  const SystemParams p;
  const SpaceLayout layout({2, 2, 2});
  const SparseOperator h0 = hamiltonian_full(p, layout, false).at(0.0);
  EXPECT_NEAR(std::abs(h0.at(layout.index(Level::g, 1, 0, 0), layout.index(Level::e, 0, 0, 0))),
              angular_from_mhz(35.0), 1e-12);
  EXPECT_NEAR(std::abs(h0.at(layout.index(Level::e, 0, 1, 0), layout.index(Level::f, 0, 0, 0))),
              angular_from_mhz(50.5), 1e-12);
  EXPECT_EQ(h0.at(layout.index(Level::f, 0, 0, 0), layout.index(Level::e, 1, 0, 0)), cd{});

  const SparseOperator e0 = hamiltonian_full(p, layout, true).at(0.0);
  const cd gt1 = e0.at(layout.index(Level::f, 0, 0, 0), layout.index(Level::e, 1, 0, 0));
  EXPECT_NEAR(std::abs(gt1), angular_from_mhz(49.5), 1e-12);
  EXPECT_NEAR(p.gt_mhz[0] / (std::sqrt(2.0) * p.g_mhz[0]), 1.0, 0.01);
}

TEST(HamiltonianFull, ZeroCouplingsVanish) {
  SystemParams p;
  p.g_mhz = {0, 0, 0};
  p.gt_mhz = {0, 0, 0};
  p.crosstalk_ratio = 0.0;
  const SpaceLayout layout({2, 2, 2});
  const Generator h = hamiltonian_full(p, layout, true);
  for (double t : {0.0, 0.1, 0.4}) EXPECT_EQ(max_abs(h.at(t)), 0.0);
}

TEST(HamiltonianFull, CrosstalkPairSelection) {
  SystemParams p;
  const SpaceLayout layout({1, 1, 1});
  const auto count = [&](CrosstalkPairs pairs) {
    p.crosstalk_pairs = pairs;
    const Generator h = hamiltonian_full(p, layout, true);
    int n = 0;
    for (const auto& term : h.terms()) n += term.label.starts_with("crosstalk");
    return n;
  };
  EXPECT_EQ(count(CrosstalkPairs::all), 3);
  EXPECT_EQ(count(CrosstalkPairs::pair23), 1);
}

TEST(Generators, HermitianAtRandomTimes) {
  const SystemParams p = with_designed_couplings(SystemParams{});
  const SpaceLayout layout({2, 2, 2});
  std::vector<Generator> gens{hamiltonian_full(p, layout, false), hamiltonian_full(p, layout, true)};
  for (auto level : {EffectiveLevel::stark, EffectiveLevel::kerr, EffectiveLevel::diagonal}) {
    gens.push_back(hamiltonian_effective(p, layout, level, false));
    gens.push_back(hamiltonian_effective(p, layout, level, true));
  }
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> time(0.0, 0.41);
  for (const auto& g : gens) {
    for (int k = 0; k < 20; ++k) EXPECT_LT(g.at(time(rng)).hermiticity_error(), 1e-10);
  }
}

TEST(HamiltonianEffective, DiagonalEigenvalues) {
  const SystemParams p = with_designed_couplings(SystemParams{});
  const SpaceLayout layout({3, 3, 3});
  const SparseOperator h = hamiltonian_effective(p, layout, EffectiveLevel::diagonal, false).at(0.0);
  EXPECT_TRUE(h.is_diagonal());
  const EffectiveRates r = effective_rates(p);
  const std::size_t i = layout.index(Level::g, 1, 1, 0);
  EXPECT_NEAR(h.at(i, i).real(), angular_from_mhz(r.lambda1 - r.chi12), 1e-12);
  for (std::size_t k = 0; k < layout.total_dim(); ++k) {
    if (layout.state(k).qutrit != Level::g) EXPECT_EQ(h.at(k, k), cd{});
  }
}

TEST(HamiltonianEffective, KerrMatchesDiagonalOnGroundManifold) {
  const SystemParams p = with_designed_couplings(SystemParams{});
  const SpaceLayout layout({3, 3, 3});
  const Dense kerr = hamiltonian_effective(p, layout, EffectiveLevel::kerr, false).at(0.37).to_dense();
  const Dense diag = hamiltonian_effective(p, layout, EffectiveLevel::diagonal, false).at(0.37).to_dense();
  const std::size_t g_block = layout.total_dim() / 3;
  EXPECT_LT((kerr.topLeftCorner(g_block, g_block) - diag.topLeftCorner(g_block, g_block)).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(HamiltonianEffective, StarkShiftsAndRamanTerm) {
  const SystemParams p = with_designed_couplings(SystemParams{});
  const SpaceLayout layout({2, 2, 2});
  const EffectiveRates r = effective_rates(p);
  const SparseOperator h = hamiltonian_effective(p, layout, EffectiveLevel::stark, false).at(0.0);
  // lambda1 n1 |g><g| on |g,1,0,0>
  const std::size_t g100 = layout.index(Level::g, 1, 0, 0);
  EXPECT_NEAR(h.at(g100, g100).real(), angular_from_mhz(r.lambda1), 1e-12);
  // -lambda1 a1 a1+ |e><e| - lambda2 n2 |e><e| on |e,0,1,0>
  const std::size_t e010 = layout.index(Level::e, 0, 1, 0);
  EXPECT_NEAR(h.at(e010, e010).real(), -angular_from_mhz(r.lambda1 + r.lambda2), 1e-12);
  // lambda_12 a1+ a2+ |g><f| at t = 0
  EXPECT_NEAR(std::abs(h.at(layout.index(Level::g, 1, 1, 0), layout.index(Level::f, 0, 0, 0))),
              angular_from_mhz(r.lambda12), 1e-12);
}

TEST(HamiltonianEffective, UnknownLevelAndDispersiveWarning) {
  EXPECT_THROW(parse_effective_level("quartic"), std::invalid_argument);
  EXPECT_EQ(parse_effective_level("kerr"), EffectiveLevel::kerr);

  std::vector<std::string> messages;
  const auto previous = set_warning_sink([&](const std::string& m) { messages.push_back(m); });
  SystemParams p;
  hamiltonian_effective(p, SpaceLayout({1, 1, 1}), EffectiveLevel::diagonal, false);
  const std::size_t quiet = messages.size();
  p.g_mhz[0] = 100.0;
  hamiltonian_effective(p, SpaceLayout({1, 1, 1}), EffectiveLevel::diagonal, false);
  set_warning_sink(previous);
  EXPECT_EQ(quiet, 0u);
  ASSERT_EQ(messages.size(), 1u);
  EXPECT_NE(messages[0].find("cavity 1"), std::string::npos);
}

TEST(AnalyticUnitary, ParityPhases) {
  const SystemParams p = with_designed_couplings(SystemParams{});
  const EffectiveRates r = effective_rates(p);
  const SpaceLayout layout({6, 6, 6});
  const double t = gate_time(r);
  const SparseOperator u = analytic_unitary(r, layout, t);
  for (int n1 = 0; n1 <= 6; ++n1) {
    for (int n2 = 0; n2 <= 6; ++n2) {
      const std::size_t i = layout.index(Level::g, n1, n2, 0);
      const double sign = (n1 * n2) % 2 ? -1.0 : 1.0;
      EXPECT_NEAR(std::abs(u.at(i, i) - sign), 0.0, 1e-12) << n1 << " " << n2;
    }
  }
  const std::size_t e = layout.index(Level::e, 3, 1, 1);
  EXPECT_EQ(u.at(e, e), cd{1.0});
  EXPECT_NEAR(std::abs(u.at(layout.index(Level::g, 1, 1, 0), layout.index(Level::g, 1, 1, 0)) + 1.0), 0.0, 1e-12);
  EXPECT_EQ(max_abs(analytic_unitary(r, layout, 0.0) - SparseOperator::identity(layout.total_dim())), 0.0);
}

}  // namespace
}  // namespace catghz
