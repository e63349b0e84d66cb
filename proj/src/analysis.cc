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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "catghz/cat_code.h"
#include "catghz/hamiltonian.h"
#include "catghz/lindblad.h"

namespace catghz {

namespace {

constexpr double kConstraintTolerance = 0.02;

Generator build_generator(Scenario scenario, const SystemParams& params, const SpaceLayout& layout) {
  switch (scenario) {
    case Scenario::full_with_errors:
      return hamiltonian_full(params, layout, true);
    case Scenario::full_ideal:
      return hamiltonian_full(params, layout, false);
    case Scenario::effective_diagonal:
      return hamiltonian_effective(params, layout, EffectiveLevel::diagonal, false);
    case Scenario::effective_with_crosstalk:
      return hamiltonian_effective(params, layout, EffectiveLevel::diagonal, true);
  }
  throw std::invalid_argument("unknown scenario");
}

IntegrationConfig make_config(const IntegrationSettings& s, const Generator& h, const SpaceLayout& layout,
                              double t_final) {
  IntegrationConfig config;
  config.method = s.method.value_or(h.max_frequency() > 0.0 ? Method::rk4 : Method::adaptive);
  config.t_final = t_final;
  config.dt = s.dt;
  config.steps_per_period = s.steps_per_period;
  config.tolerance = s.tolerance;
  config.layout = layout;
  if (s.samples >= 2) {
    for (std::size_t k = 0; k < s.samples; ++k) {
      config.sample_times.push_back(t_final * static_cast<double>(k) / static_cast<double>(s.samples - 1));
    }
    config.sample_times.back() = t_final;
  }
  return config;
}

}  // namespace

std::string scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::full_with_errors:
      return "full_with_errors";
    case Scenario::full_ideal:
      return "full_ideal";
    case Scenario::effective_diagonal:
      return "effective_diagonal";
    case Scenario::effective_with_crosstalk:
      return "effective_with_crosstalk";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& name) {
  for (Scenario s : {Scenario::full_with_errors, Scenario::full_ideal, Scenario::effective_diagonal,
                     Scenario::effective_with_crosstalk}) {
    if (scenario_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown scenario '" + name +
                              "' (expected full_with_errors, full_ideal, effective_diagonal or "
                              "effective_with_crosstalk)");
}

double fidelity(const DensityMatrix& rho, const StateVector& target) {
  if (rho.dim() != target.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  if (std::abs(target.norm() - 1.0) > 1e-9) throw std::invalid_argument("fidelity: target is not normalized");
  const double overlap = rho.expectation(target).real();
  if (overlap < -1e-9) throw std::domain_error("fidelity: <psi|rho|psi> is negative; rho is not a valid state");
  return std::clamp(std::sqrt(std::max(overlap, 0.0)), 0.0, 1.0);
}

double fidelity(const StateVector& psi, const StateVector& target) {
  if (psi.dim() != target.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  if (std::abs(target.norm() - 1.0) > 1e-9) throw std::invalid_argument("fidelity: target is not normalized");
  return std::clamp(std::abs(target.inner(psi)), 0.0, 1.0);
}

double qutrit_leakage(const SimulationResult& result) {
  double leak = 0.0;
  for (const auto& s : result.samples) {
    leak = std::max(leak, s.qutrit_population[1] + s.qutrit_population[2]);
  }
  return leak;
}

void check_protocol_constraint(const SystemParams& params) {
  const auto residuals = constraint_residuals(effective_rates(params));
  for (int k = 0; k < 2; ++k) {
    if (std::abs(residuals[k]) > kConstraintTolerance * 0.5) {
      throw ConstraintError("protocol requires chi_1" + std::to_string(k + 2) +
                            " = lambda_1 / 2 within 2%; residual chi/lambda_1 - 1/2 = " +
                            std::to_string(residuals[k]));
    }
  }
}

SystemParams with_kappa_inverse(SystemParams params, double kappa_inverse_us) {
  if (!(kappa_inverse_us > 0.0)) throw std::invalid_argument("kappa_inverse must be positive");
  const double kappa = std::isinf(kappa_inverse_us) ? 0.0 : 1.0 / kappa_inverse_us;
  params.kappa_per_us = {kappa, kappa, kappa};
  return params;
}

ProtocolResult run_protocol(const ScenarioSpec& spec) {
  const SystemParams params = with_kappa_inverse(spec.params, spec.kappa_inverse_us);
  validate(params);
  check_protocol_constraint(params);

  const SpaceLayout layout(params.truncations);
  const int n_max = *std::max_element(params.truncations.begin(), params.truncations.end());
  const CatCode code(params.alpha, n_max);
  const StateVector psi0 = prepare_initial(code, layout);

  ProtocolResult out;
  out.gate_time_us = gate_time(effective_rates(params));
  const Generator h = build_generator(spec.model, params, layout);
  const IntegrationConfig config = make_config(spec.integration, h, layout, out.gate_time_us);

  SparseOperator rotation = code_hadamard(layout, code, 2) * code_hadamard(layout, code, 3);
  const StateVector ghz = ghz_target(code, layout);
  const StateVector entangled = pre_rotation_target(code, layout);

  if (spec.decoherence) {
    const DissipatorSet d = build_dissipators(params, layout);
    out.simulation = evolve(h, d, DensityMatrix::pure(psi0), config);
    const DensityMatrix& rho = *out.simulation.final_rho;
    out.pre_rotation_fidelity = fidelity(rho, entangled);
    out.fidelity = fidelity(rho.conjugated(rotation), ghz);
  } else {
    out.simulation = evolve_pure(h, psi0, config);
    const StateVector& psi = *out.simulation.final_state;
    out.pre_rotation_fidelity = fidelity(psi, entangled);
    out.fidelity = fidelity(psi.applied(rotation), ghz);
  }
  out.leakage = qutrit_leakage(out.simulation);
  return out;
}

SweepResult sweep_kappa(const std::vector<ScenarioSpec>& bases, const std::vector<double>& kappa_inverses,
                        const SweepOptions& options) {
  if (bases.empty()) throw std::invalid_argument("sweep_kappa: no scenarios");
  if (kappa_inverses.empty()) throw std::invalid_argument("sweep_kappa: empty kappa_inverse list");
  for (double k : kappa_inverses) {
    if (!(k > 0.0)) throw std::invalid_argument("sweep_kappa: kappa_inverse values must be positive");
  }

  const std::size_t total = bases.size() * kappa_inverses.size();
  std::vector<std::optional<SweepRow>> rows(total);
  std::vector<std::optional<SweepFailure>> failures(total);
  std::atomic<std::size_t> next{0};
  std::mutex collector;

  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      ScenarioSpec spec = bases[i / kappa_inverses.size()];
      spec.kappa_inverse_us = kappa_inverses[i % kappa_inverses.size()];
      try {
        const auto start = std::chrono::steady_clock::now();
        const ProtocolResult r = run_protocol(spec);
        SweepRow row;
        row.kappa_inverse_us = spec.kappa_inverse_us;
        row.scenario = spec.model;
        row.fidelity = r.fidelity;
        row.pre_rotation_fidelity = r.pre_rotation_fidelity;
        row.gate_time_us = r.gate_time_us;
        row.trace_drift = r.simulation.max_trace_drift;
        row.leakage = r.leakage;
        row.steps = r.simulation.step_count;
        row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::lock_guard lock(collector);
        rows[i] = row;
        if (options.on_row) options.on_row(row);
      } catch (const std::exception& e) {
        std::lock_guard lock(collector);
        failures[i] = SweepFailure{spec.kappa_inverse_us, spec.model, e.what()};
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, total);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  SweepResult result;
  for (std::size_t i = 0; i < total; ++i) {
    if (rows[i]) result.rows.push_back(*rows[i]);
    if (failures[i]) result.failures.push_back(*failures[i]);
  }
  if (!result.failures.empty()) {
    const auto& f = result.failures.front();
    throw SweepError(std::to_string(result.failures.size()) + " sweep point(s) failed; first: " +
                         scenario_name(f.scenario) + " at kappa_inverse = " + std::to_string(f.kappa_inverse_us) +
                         " us: " + f.message,
                     std::move(result));
  }
  return result;
}

}  // namespace catghz
