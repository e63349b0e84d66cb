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
#include <numbers>
#include <stdexcept>
#include <string>

#include "catghz/fock_space.h"

namespace catghz {

// Configuration values are entered as nu = omega/2pi: GHz for frequencies,
// MHz for couplings. Decay and dephasing rates are plain rates in 1/us.
// Internally every frequency is converted to angular units of rad/us.
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double angular_from_mhz(double nu_mhz) { return kTwoPi * nu_mhz; }
constexpr double angular_from_ghz(double nu_ghz) { return kTwoPi * 1e3 * nu_ghz; }

// Which cavity pairs carry the direct photon-hopping crosstalk term.
enum class CrosstalkPairs { all, pair23 };

struct SystemParams {
  std::array<double, 3> nu_c_ghz{7.0, 5.69, 5.68};
  double nu_eg_ghz = 6.5;
  double nu_fe_ghz = 6.2;
  std::array<double, 3> g_mhz{35.0, 50.5, 72.1};
  // Unwanted couplings: cavity 1 to e<->f, cavities 2,3 to g<->e.
  std::array<double, 3> gt_mhz{49.5, 35.7, 41.6};
  // g_kl = crosstalk_ratio * max(g1, g2, g3)
  double crosstalk_ratio = 0.01;
  CrosstalkPairs crosstalk_pairs = CrosstalkPairs::all;
  std::array<double, 3> kappa_per_us{1.0 / 300.0, 1.0 / 300.0, 1.0 / 300.0};
  double gamma_eg_per_us = 1.0 / 60.0;
  double gamma_fe_per_us = 1.0 / 30.0;
  double gamma_fg_per_us = 1.0 / 150.0;
  double gamma_phi_e_per_us = 1.0 / 20.0;
  double gamma_phi_f_per_us = 1.0 / 20.0;
  double alpha = 0.5;
  std::array<int, 3> truncations{5, 5, 5};

  bool operator==(const SystemParams&) const = default;

  double nu_fg_ghz() const { return nu_eg_ghz + nu_fe_ghz; }
  double crosstalk_mhz() const;
};

// Raised when a physical relation between parameters does not hold; the
// message names the violated relation.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All values in GHz (omega/2pi). Signed, named after the magnitudes they
// equal in the intended level scheme.
struct Detunings {
  double delta1;    // |d1|  = w_c1 - w_eg
  double delta2;    // |d2|  = w_fe - w_c2
  double delta3;    // |d3|  = w_fe - w_c3
  double Delta12;   // D_12  = w_fg - w_c1 - w_c2
  double Delta13;   // D_13  = w_fg - w_c1 - w_c3
  double deltat1;   // |d~1| = w_c1 - w_fe
  double deltat2;   // |d~2| = w_eg - w_c2
  double deltat3;   // |d~3| = w_eg - w_c3
  double Deltat12;  // D~_kl = w_ck - w_cl
  double Deltat13;
  double Deltat23;

  double delta(int cavity) const;
  double Delta1(int cavity) const;     // cavity in {2, 3}
  double deltat(int cavity) const;
  double Deltat(int k, int l) const;   // k < l
};

// All values in MHz (omega/2pi).
struct EffectiveRates {
  double lambda1;
  double lambda2;
  double lambda3;
  double lambda12;
  double lambda13;
  double lambda23;
  double chi12;
  double chi13;

  double chi(int cavity) const { return cavity == 2 ? chi12 : chi13; }
  double lambda1l(int cavity) const { return cavity == 2 ? lambda12 : lambda13; }
};

// Checks anharmonicity, rate signs, cat amplitude and truncations.
void validate(const SystemParams& params);

Detunings derive_detunings(const SystemParams& params);

// Couplings g2, g3 (MHz) that make chi_1l = lambda_1 / 2.
std::array<double, 2> solve_coupling_constraint(const SystemParams& params);
// Returns a copy with g2, g3 replaced by the solved values.
SystemParams with_designed_couplings(SystemParams params);

EffectiveRates effective_rates(const SystemParams& params);

// Protocol duration in us: 2pi / lambda_1 (= 1/lambda1 with lambda1 in MHz).
// Warns when pi/chi_1l deviates from it by more than 2%.
double gate_time(const EffectiveRates& rates);

// chi_1l / lambda_1 - 1/2 for l = 2, 3.
std::array<double, 2> constraint_residuals(const EffectiveRates& rates);

// Q = omega_c * kappa^{-1}.
double quality_factor(double nu_ghz, double kappa_inverse_us);

}  // namespace catghz
