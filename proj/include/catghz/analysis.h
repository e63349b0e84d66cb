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

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catghz/integrator.h"
#include "catghz/params.h"
#include "catghz/state.h"

namespace catghz {

enum class Scenario { full_with_errors, full_ideal, effective_diagonal, effective_with_crosstalk };

std::string scenario_name(Scenario scenario);
Scenario parse_scenario(const std::string& name);

// Numerical settings of one protocol run. An unset method picks rk4 when the
// generator carries oscillating phases and the adaptive method otherwise.
struct IntegrationSettings {
  std::optional<Method> method;
  double dt = 0.0;  // us; 0 = automatic
  double steps_per_period = 50.0;
  double tolerance = 1e-9;
  std::size_t samples = 21;  // evenly spaced, including both end points

  bool operator==(const IntegrationSettings&) const = default;
};

struct ScenarioSpec {
  Scenario model = Scenario::full_with_errors;
  bool decoherence = true;
  // Cavity lifetime applied to all three cavities; infinity means kappa = 0.
  double kappa_inverse_us = 300.0;
  SystemParams params;
  IntegrationSettings integration;
};

// sqrt(<psi|rho|psi>), clamped to [0, 1]. Throws std::domain_error when the
// overlap is below -1e-9.
double fidelity(const DensityMatrix& rho, const StateVector& target);
double fidelity(const StateVector& psi, const StateVector& target);

// Max over samples of P(e) + P(f).
double qutrit_leakage(const SimulationResult& result);

struct ProtocolResult {
  double fidelity = 0.0;
  // Fidelity with the entangled state reached before the final rotations.
  double pre_rotation_fidelity = 0.0;
  double gate_time_us = 0.0;
  double leakage = 0.0;
  SimulationResult simulation;
};

// Prepares the product of cat superpositions with the qutrit in |g>, evolves
// for t = 1/lambda1, applies the code Hadamard to cavities 2 and 3 and
// compares with the GHZ target.
ProtocolResult run_protocol(const ScenarioSpec& spec);

// Throws ConstraintError unless chi_1l/lambda1 is within 2% of 1/2.
void check_protocol_constraint(const SystemParams& params);

SystemParams with_kappa_inverse(SystemParams params, double kappa_inverse_us);

struct SweepRow {
  double kappa_inverse_us = 0.0;
  Scenario scenario = Scenario::full_with_errors;
  double fidelity = 0.0;
  double pre_rotation_fidelity = 0.0;
  double gate_time_us = 0.0;
  double trace_drift = 0.0;
  double leakage = 0.0;
  std::size_t steps = 0;
  double wall_time_s = 0.0;
};

struct SweepFailure {
  double kappa_inverse_us = 0.0;
  Scenario scenario = Scenario::full_with_errors;
  std::string message;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (scenario, kappa) input index
  std::vector<SweepFailure> failures;
};

struct SweepOptions {
  std::size_t workers = 1;
  // Called once per finished row, serialized, in completion order.
  std::function<void(const SweepRow&)> on_row;
};

class SweepError : public std::runtime_error {
 public:
  SweepError(const std::string& what, SweepResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const SweepResult& partial() const { return partial_; }

 private:
  SweepResult partial_;
};

// Runs every base scenario at every kappa_inverse on a bounded worker pool.
// Failed points do not stop the others; if any failed, SweepError carries the
// completed rows.
SweepResult sweep_kappa(const std::vector<ScenarioSpec>& bases, const std::vector<double>& kappa_inverses,
                        const SweepOptions& options = {});

}  // namespace catghz
