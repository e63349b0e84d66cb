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

#include "catghz/params.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catghz/log.h"

namespace catghz {

namespace {

constexpr double kGateTimeTolerance = 0.02;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void require_rate(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConstraintError(std::string(name) + " must be a finite rate >= 0, got " + fmt(value));
  }
}

}  // namespace

double SystemParams::crosstalk_mhz() const {
  return crosstalk_ratio * *std::max_element(g_mhz.begin(), g_mhz.end());
}

double Detunings::delta(int cavity) const {
  check_cavity(cavity);
  return cavity == 1 ? delta1 : cavity == 2 ? delta2 : delta3;
}

double Detunings::Delta1(int cavity) const {
  if (cavity != 2 && cavity != 3) throw std::out_of_range("Delta_1l is defined for l = 2, 3");
  return cavity == 2 ? Delta12 : Delta13;
}

double Detunings::deltat(int cavity) const {
  check_cavity(cavity);
  return cavity == 1 ? deltat1 : cavity == 2 ? deltat2 : deltat3;
}

double Detunings::Deltat(int k, int l) const {
  if (k == 1 && l == 2) return Deltat12;
  if (k == 1 && l == 3) return Deltat13;
  if (k == 2 && l == 3) return Deltat23;
  throw std::out_of_range("Deltat(k, l) requires k < l in 1..3");
}

void validate(const SystemParams& p) {
  if (!(p.nu_fe_ghz < p.nu_eg_ghz)) {
    throw ConstraintError("anharmonicity violated: requires w_fe < w_eg, got w_fe/2pi = " + fmt(p.nu_fe_ghz) +
                          " GHz, w_eg/2pi = " + fmt(p.nu_eg_ghz) + " GHz");
  }
  for (int l = 0; l < 3; ++l) {
    if (!(p.nu_c_ghz[l] > 0.0)) throw ConstraintError("cavity frequency must be > 0");
    if (!(p.g_mhz[l] >= 0.0)) throw ConstraintError("coupling g" + std::to_string(l + 1) + " must be >= 0");
    if (!(p.gt_mhz[l] >= 0.0)) throw ConstraintError("coupling gt" + std::to_string(l + 1) + " must be >= 0");
    require_rate(p.kappa_per_us[l], ("kappa" + std::to_string(l + 1)).c_str());
    if (p.truncations[l] < 1) throw ConstraintError("Fock truncations must be >= 1");
  }
  if (!(p.crosstalk_ratio >= 0.0)) throw ConstraintError("crosstalk_ratio must be >= 0");
  require_rate(p.gamma_eg_per_us, "gamma_eg");
  require_rate(p.gamma_fe_per_us, "gamma_fe");
  require_rate(p.gamma_fg_per_us, "gamma_fg");
  require_rate(p.gamma_phi_e_per_us, "gamma_phi_e");
  require_rate(p.gamma_phi_f_per_us, "gamma_phi_f");
  if (!(p.alpha > 0.0)) throw ConstraintError("cat amplitude alpha must be > 0");
}

Detunings derive_detunings(const SystemParams& p) {
  validate(p);
  const auto& c = p.nu_c_ghz;
  Detunings d{};
  d.delta1 = c[0] - p.nu_eg_ghz;
  d.delta2 = p.nu_fe_ghz - c[1];
  d.delta3 = p.nu_fe_ghz - c[2];
  d.Delta12 = p.nu_fg_ghz() - c[0] - c[1];
  d.Delta13 = p.nu_fg_ghz() - c[0] - c[2];
  d.deltat1 = c[0] - p.nu_fe_ghz;
  d.deltat2 = p.nu_eg_ghz - c[1];
  d.deltat3 = p.nu_eg_ghz - c[2];
  d.Deltat12 = c[0] - c[1];
  d.Deltat13 = c[0] - c[2];
  d.Deltat23 = c[1] - c[2];

  if (!(d.delta1 > 0.0)) {
    throw ConstraintError("requires |d1| = w_c1 - w_eg > 0, got " + fmt(d.delta1) + " GHz");
  }
  for (int l = 2; l <= 3; ++l) {
    if (!(d.Delta1(l) > 0.0)) {
      throw ConstraintError("requires D_1" + std::to_string(l) + " = w_fg - w_c1 - w_c" + std::to_string(l) +
                            " > 0, got " + fmt(d.Delta1(l)) + " GHz");
    }
    // |d_l| = |d_1| + D_1l holds identically; guard against arithmetic drift
    if (std::abs(d.delta(l) - (d.delta1 + d.Delta1(l))) > 1e-9) {
      throw ConstraintError("detuning relation |d_l| = |d_1| + D_1l violated");
    }
  }
  return d;
}

std::array<double, 2> solve_coupling_constraint(const SystemParams& p) {
  const Detunings d = derive_detunings(p);
  std::array<double, 2> g{};
  for (int l = 2; l <= 3; ++l) {
    const double radicand = 2.0 * d.Delta1(l) * d.delta1;
    if (radicand < 0.0) throw ConstraintError("coupling constraint has negative radicand 2 D_1l |d1|");
    const double g_ghz = d.delta(l) / (d.delta1 + d.delta(l)) * std::sqrt(radicand);
    g[l - 2] = g_ghz * 1e3;
  }
  return g;
}

SystemParams with_designed_couplings(SystemParams params) {
  const auto g = solve_coupling_constraint(params);
  params.g_mhz[1] = g[0];
  params.g_mhz[2] = g[1];
  return params;
}

EffectiveRates effective_rates(const SystemParams& p) {
  const Detunings d = derive_detunings(p);
  const double d1 = d.delta1 * 1e3;
  const double d2 = d.delta2 * 1e3;
  const double d3 = d.delta3 * 1e3;
  const double D12 = d.Delta12 * 1e3;
  const double D13 = d.Delta13 * 1e3;
  if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0 || D12 == 0.0 || D13 == 0.0) {
    throw ConstraintError("effective rates require nonzero detunings");
  }
  const auto& g = p.g_mhz;
  EffectiveRates r{};
  r.lambda1 = g[0] * g[0] / d1;
  r.lambda2 = g[1] * g[1] / d2;
  r.lambda3 = g[2] * g[2] / d3;
  r.lambda12 = 0.5 * g[0] * g[1] * (1.0 / d1 + 1.0 / d2);
  r.lambda13 = 0.5 * g[0] * g[2] * (1.0 / d1 + 1.0 / d3);
  r.lambda23 = 0.5 * g[1] * g[2] * (1.0 / d2 + 1.0 / d3);
  r.chi12 = r.lambda12 * r.lambda12 / D12;
  r.chi13 = r.lambda13 * r.lambda13 / D13;
  return r;
}

double gate_time(const EffectiveRates& rates) {
  if (rates.lambda1 == 0.0) throw std::domain_error("gate_time: lambda_1 is zero");
  const double t = 1.0 / rates.lambda1;
  for (int l = 2; l <= 3; ++l) {
    const double chi = rates.chi(l);
    const double t_chi = chi != 0.0 ? 0.5 / chi : INFINITY;
    if (std::abs(t_chi - t) > kGateTimeTolerance * t) {
      warn("gate time mismatch: pi/chi_1" + std::to_string(l) + " = " + fmt(t_chi) + " us differs from 2pi/lambda_1 = " +
           fmt(t) + " us by more than 2%");
    }
  }
  return t;
}

std::array<double, 2> constraint_residuals(const EffectiveRates& rates) {
  return {rates.chi12 / rates.lambda1 - 0.5, rates.chi13 / rates.lambda1 - 0.5};
}

double quality_factor(double nu_ghz, double kappa_inverse_us) {
  return angular_from_ghz(nu_ghz) * kappa_inverse_us;
}

}  // namespace catghz
