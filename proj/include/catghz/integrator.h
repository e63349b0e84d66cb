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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catghz/fock_space.h"
#include "catghz/lindblad.h"
#include "catghz/state.h"

namespace catghz {

enum class Method { rk4, adaptive };

Method parse_method(const std::string& name);
std::string method_name(Method method);

struct IntegrationConfig {
  Method method = Method::rk4;
  double t_final = 0.0;  // us
  // Fixed step in us; 0 selects 1/(steps_per_period * f_max), where f_max is
  // the fastest phase (or rate bound) of the generator in cycles per us.
  double dt = 0.0;
  double steps_per_period = 50.0;
  // Relative and absolute tolerance of the adaptive method, in (0, 1e-3].
  double tolerance = 1e-9;
  // Times (us) at which observables are recorded; t = 0 and t_final are
  // always sampled.
  std::vector<double> sample_times;
  // Enables per-sample populations and photon numbers.
  std::optional<SpaceLayout> layout;
  // Enables per-sample fidelity sqrt(<psi|rho|psi>).
  std::optional<StateVector> fidelity_target;
  double max_trace_drift = 1e-6;
  std::size_t max_steps = 100'000'000;
};

struct Sample {
  double t = 0.0;
  double trace = 0.0;
  std::array<double, 3> qutrit_population{};  // g, e, f
  std::array<double, 3> mean_photons{};
  std::optional<double> fidelity;
};

struct SimulationResult {
  // Set by evolve().
  std::optional<DensityMatrix> final_rho;
  // Set by evolve_pure().
  std::optional<StateVector> final_state;
  std::vector<Sample> samples;
  std::size_t step_count = 0;
  double wall_time_s = 0.0;
  double max_trace_drift = 0.0;
  double max_hermiticity_error = 0.0;
};

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integrates the master equation from rho0 over [0, config.t_final]. The
// state is re-symmetrized after every step; a trace drift above
// config.max_trace_drift aborts with IntegrationError.
SimulationResult evolve(const Generator& h, const DissipatorSet& d, const DensityMatrix& rho0,
                        const IntegrationConfig& config);

// Schrodinger evolution of a pure state under H(t), for dissipation-free runs.
SimulationResult evolve_pure(const Generator& h, const StateVector& psi0, const IntegrationConfig& config);

// Step size the fixed-step method uses for this generator.
double fixed_step(const MasterEquation& eq, const IntegrationConfig& config);

}  // namespace catghz
