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

#include "catghz/analysis.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

namespace catghz {
namespace {

ScenarioSpec fast_spec(Scenario model, bool decoherence) {
  ScenarioSpec s;
  s.model = model;
  s.decoherence = decoherence;
  s.params = with_designed_couplings(SystemParams{});
  return s;
}

TEST(Fidelity, PureMixedAndOrthogonal) {
  const StateVector a = StateVector::basis(4, 0);
  const StateVector b = StateVector::basis(4, 1);
  EXPECT_DOUBLE_EQ(fidelity(DensityMatrix::pure(a), a), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(DensityMatrix::pure(b), a), 0.0);
  RowMatrix m = 0.5 * (DensityMatrix::pure(a).matrix() + DensityMatrix::pure(b).matrix());
  EXPECT_NEAR(fidelity(DensityMatrix(m), a), std::sqrt(0.5), 1e-15);
}

TEST(Fidelity, PhaseInvarianceAndPureOverlap) {
  const StateVector psi = StateVector(Eigen::VectorXcd::Random(6)).normalized();
  const StateVector phi = StateVector(Eigen::VectorXcd::Random(6)).normalized();
  const StateVector rotated(psi.amplitudes() * std::polar(1.0, 0.7));
  const auto rho = DensityMatrix::pure(phi);
  EXPECT_NEAR(fidelity(rho, psi), fidelity(rho, rotated), 1e-15);
  EXPECT_NEAR(fidelity(rho, psi), std::abs(psi.inner(phi)), 1e-14);
  EXPECT_NEAR(fidelity(phi, psi), std::abs(psi.inner(phi)), 1e-15);
}

TEST(Fidelity, Errors) {
  RowMatrix m = RowMatrix::Zero(2, 2);
  m(0, 0) = -0.1;
  m(1, 1) = 1.1;
  EXPECT_THROW(fidelity(DensityMatrix(m), StateVector::basis(2, 0)), std::domain_error);
  EXPECT_THROW(fidelity(DensityMatrix::maximally_mixed(3), StateVector::basis(2, 0)), std::invalid_argument);
  EXPECT_THROW(fidelity(DensityMatrix::maximally_mixed(2), StateVector(2)), std::invalid_argument);
}

TEST(QutritLeakage, MaxOverSamples) {
  SimulationResult r;
  EXPECT_EQ(qutrit_leakage(r), 0.0);
  r.samples.resize(3);
  r.samples[0].qutrit_population = {1.0, 0.0, 0.0};
  r.samples[1].qutrit_population = {0.9, 0.06, 0.04};
  r.samples[2].qutrit_population = {0.97, 0.02, 0.01};
  EXPECT_NEAR(qutrit_leakage(r), 0.1, 1e-15);
}

TEST(Scenario, Names) {
  for (Scenario s : {Scenario::full_with_errors, Scenario::full_ideal, Scenario::effective_diagonal,
                     Scenario::effective_with_crosstalk}) {
    EXPECT_EQ(parse_scenario(scenario_name(s)), s);
  }
  EXPECT_THROW(parse_scenario("lab_frame"), std::invalid_argument);
}

TEST(WithKappaInverse, Rates) {
  EXPECT_DOUBLE_EQ(with_kappa_inverse(SystemParams{}, 200.0).kappa_per_us[2], 1.0 / 200.0);
  EXPECT_EQ(with_kappa_inverse(SystemParams{}, std::numeric_limits<double>::infinity()).kappa_per_us[0], 0.0);
  EXPECT_THROW(with_kappa_inverse(SystemParams{}, 0.0), std::invalid_argument);
}

TEST(RunProtocol, EffectiveDiagonalIsExact) {
  ScenarioSpec s = fast_spec(Scenario::effective_diagonal, false);
  s.params.truncations = {10, 10, 10};
  const ProtocolResult r = run_protocol(s);
  EXPECT_GE(r.fidelity, 1.0 - 1e-6);
  EXPECT_GE(r.pre_rotation_fidelity, 1.0 - 1e-6);
  EXPECT_LE(r.leakage, 1e-12);
  EXPECT_NEAR(r.gate_time_us, 1.0 / 2.45, 1e-12);
}

TEST(RunProtocol, EffectiveDiagonalWithDecoherenceStaysInGround) {
  const ProtocolResult r = run_protocol(fast_spec(Scenario::effective_diagonal, true));
  EXPECT_LE(r.leakage, 1e-12);
  EXPECT_LT(r.fidelity, 1.0);
  EXPECT_GT(r.fidelity, 0.99);
  EXPECT_TRUE(r.simulation.final_rho.has_value());
}

TEST(RunProtocol, RejectsViolatedConstraint) {
  ScenarioSpec s = fast_spec(Scenario::effective_diagonal, false);
  s.params.g_mhz[1] = 40.0;
  EXPECT_THROW(run_protocol(s), ConstraintError);
}

TEST(SweepKappa, OrderedDeterministicAndMonotone) {
  const std::vector<ScenarioSpec> bases{fast_spec(Scenario::effective_diagonal, true),
                                        fast_spec(Scenario::effective_diagonal, false)};
  const std::vector<double> kappas{100.0, 900.0};
  SweepOptions options;
  options.workers = 2;
  std::size_t callbacks = 0;
  options.on_row = [&](const SweepRow&) { ++callbacks; };
  const SweepResult a = sweep_kappa(bases, kappas, options);
  ASSERT_EQ(a.rows.size(), 4u);
  EXPECT_EQ(callbacks, 4u);
  EXPECT_EQ(a.rows[0].kappa_inverse_us, 100.0);
  EXPECT_EQ(a.rows[1].kappa_inverse_us, 900.0);
  EXPECT_EQ(a.rows[0].scenario, Scenario::effective_diagonal);
  EXPECT_GT(a.rows[1].fidelity, a.rows[0].fidelity);
  EXPECT_GE(a.rows[2].fidelity, 1.0 - 1e-6);

  const SweepResult b = sweep_kappa(bases, kappas, {});
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].fidelity, b.rows[i].fidelity);
    EXPECT_EQ(a.rows[i].steps, b.rows[i].steps);
  }
}

TEST(SweepKappa, FailuresKeepCompletedRows) {
  ScenarioSpec bad = fast_spec(Scenario::effective_diagonal, false);
  bad.params.g_mhz[2] = 10.0;
  const std::vector<ScenarioSpec> bases{fast_spec(Scenario::effective_diagonal, false), bad};
  try {
    sweep_kappa(bases, {300.0}, {});
    FAIL() << "expected SweepError";
  } catch (const SweepError& e) {
    ASSERT_EQ(e.partial().rows.size(), 1u);
    ASSERT_EQ(e.partial().failures.size(), 1u);
    EXPECT_NE(e.partial().failures[0].message.find("chi_13"), std::string::npos);
  }
}

TEST(SweepKappa, InvalidInput) {
  const std::vector<ScenarioSpec> bases{fast_spec(Scenario::effective_diagonal, false)};
  EXPECT_THROW(sweep_kappa({}, {300.0}), std::invalid_argument);
  EXPECT_THROW(sweep_kappa(bases, {}), std::invalid_argument);
  EXPECT_THROW(sweep_kappa(bases, {-1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace catghz
