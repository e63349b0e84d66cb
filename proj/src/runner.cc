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


#include "catghz/runner.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace catghz {

namespace {

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string metadata_json(const RunConfig& config, const SystemParams& resolved, const SweepResult& result) {
  nlohmann::json meta;
  meta["config"] = nlohmann::json::parse(serialize(config));
  meta["resolved"] = {{"nu_c_ghz", resolved.nu_c_ghz},
                      {"nu_eg_ghz", resolved.nu_eg_ghz},
                      {"nu_fe_ghz", resolved.nu_fe_ghz},
                      {"g_mhz", resolved.g_mhz},
                      {"gt_mhz", resolved.gt_mhz},
                      {"crosstalk_mhz", resolved.crosstalk_mhz()},
                      {"alpha", resolved.alpha},
                      {"truncations", resolved.truncations},
                      {"gate_time_us", gate_time(effective_rates(resolved))}};
  meta["units"] = {{"frequency", "GHz (nu = omega / 2pi)"},
                   {"coupling", "MHz (g / 2pi)"},
                   {"rate", "1/us"},
                   {"time", "us"},
                   {"fidelity", "dimensionless, sqrt(<psi|rho|psi>)"}};
  meta["completed_rows"] = result.rows.size();
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : result.failures) {
    failures.push_back(
        {{"scenario", scenario_name(f.scenario)}, {"kappa_inverse_us", f.kappa_inverse_us}, {"error", f.message}});
  }
  meta["failures"] = failures;
  return meta.dump(2) + "\n";
}

std::string summary_text(const RunConfig& config, const SweepResult& result) {
  std::ostringstream out;
  out << derived_report(config) << "\nfidelity sqrt(<psi|rho|psi>) per scenario\n";
  std::map<std::string, std::vector<const SweepRow*>> by_scenario;
  for (const auto& row : result.rows) by_scenario[scenario_name(row.scenario)].push_back(&row);
  for (const auto& [name, rows] : by_scenario) {
    out << "  " << name << "\n";
    for (const SweepRow* r : rows) {
      out << "    kappa^-1 = " << num(r->kappa_inverse_us) << " us  F = " << num(r->fidelity, 8)
          << "  leakage = " << num(r->leakage, 3) << "  steps = " << r->steps << "\n";
    }
  }
  for (const auto& f : result.failures) {
    out << "  FAILED " << scenario_name(f.scenario) << " at kappa^-1 = " << num(f.kappa_inverse_us)
        << " us: " << f.message << "\n";
  }
  return out.str();
}

void write_outputs(const std::filesystem::path& dir, const RunConfig& config, const SystemParams& resolved,
                   const SweepResult& result) {
  write_file(dir / "results.csv", results_csv(result.rows));
  write_file(dir / "summary.txt", summary_text(config, result));
  write_file(dir / "metadata.json", metadata_json(config, resolved, result));
  std::map<std::string, std::string> plots;
  for (const auto& row : result.rows) {
    auto& text = plots[scenario_name(row.scenario)];
    if (text.empty()) text = "# kappa_inverse_us fidelity\n";
    text += num(row.kappa_inverse_us, 10) + " " + num(row.fidelity, 12) + "\n";
  }
  for (const auto& [name, text] : plots) write_file(dir / ("fidelity_" + name + ".dat"), text);
}

}  // namespace

std::size_t default_workers() {
  if (const char* env = std::getenv("CATGHZ_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunConfig apply_overrides(RunConfig config, const RunOptions& options) {
  if (options.scenario) {
    const Scenario wanted = parse_scenario(*options.scenario);
    std::erase_if(config.scenarios, [&](const ScenarioEntry& e) { return e.model != wanted; });
    if (config.scenarios.empty()) {
      throw ConfigError("scenario '" + *options.scenario + "' is not listed in the config");
    }
  }
  if (options.output_dir) config.output_dir = *options.output_dir;
  if (options.truncation) config.params.truncations = {*options.truncation, *options.truncation, *options.truncation};
  validate(config);
  return config;
}

std::string derived_report(const RunConfig& config) {
  const SystemParams p = resolved_params(config);
  const Detunings d = derive_detunings(p);
  const EffectiveRates r = effective_rates(p);
  const auto residuals = constraint_residuals(r);
  std::ostringstream out;
  out << "couplings g/2pi (MHz): " << num(p.g_mhz[0]) << ", " << num(p.g_mhz[1]) << ", " << num(p.g_mhz[2])
      << (config.design ? " (g2, g3 from the coupling constraint)" : "") << "\n";
  out << "crosstalk g_kl/2pi (MHz): " << num(p.crosstalk_mhz()) << "\n";
  out << "detunings /2pi (GHz): d1 = " << num(d.delta1) << ", d2 = " << num(d.delta2) << ", d3 = " << num(d.delta3)
      << ", D12 = " << num(d.Delta12) << ", D13 = " << num(d.Delta13) << "\n";
  out << "effective rates /2pi (MHz): lambda1 = " << num(r.lambda1) << ", lambda12 = " << num(r.lambda12)
      << ", lambda13 = " << num(r.lambda13) << ", chi12 = " << num(r.chi12) << ", chi13 = " << num(r.chi13) << "\n";
  out << "gate time (us): " << num(gate_time(r)) << "\n";
  out << "constraint residuals chi_1l/lambda1 - 1/2: " << num(residuals[0], 3) << ", " << num(residuals[1], 3)
      << "\n";
  out << "Fock truncations: " << p.truncations[0] << ", " << p.truncations[1] << ", " << p.truncations[2] << "\n";
  out << "quality factors Q_l = omega_cl / kappa (dimensionless):\n";
  for (double k : config.kappa_inverses_us) {
    out << "  kappa^-1 = " << num(k) << " us:";
    for (int l = 0; l < 3; ++l) out << " Q" << l + 1 << " = " << num(quality_factor(p.nu_c_ghz[l], k), 4);
    out << "\n";
  }
  return out.str();
}

std::string results_csv(const std::vector<SweepRow>& rows) {
  std::string text = "kappa_inverse_us,scenario,fidelity,gate_time_us,trace_drift,leakage,steps,wall_time_s\n";
  for (const auto& r : rows) {
    text += num(r.kappa_inverse_us, 10) + "," + scenario_name(r.scenario) + "," + num(r.fidelity, 12) + "," +
            num(r.gate_time_us, 10) + "," + num(r.trace_drift, 4) + "," + num(r.leakage, 6) + "," +
            std::to_string(r.steps) + "," + num(r.wall_time_s, 4) + "\n";
  }
  return text;
}

int run(const RunConfig& config, const RunOptions& options, std::ostream& log) {
  if (options.check_only) {
    log << derived_report(config);
    check_protocol_constraint(resolved_params(config));
    log << "configuration valid\n";
    return 0;
  }

  const SystemParams resolved = resolved_params(config);
  std::vector<ScenarioSpec> bases;
  for (const auto& entry : config.scenarios) {
    ScenarioSpec spec;
    spec.model = entry.model;
    spec.decoherence = entry.decoherence;
    spec.params = resolved;
    spec.integration = config.integration;
    bases.push_back(spec);
  }

  const std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);

  std::mutex log_mutex;
  SweepOptions sweep;
  sweep.workers = options.workers.value_or(default_workers());
  sweep.on_row = [&](const SweepRow& row) {
    std::lock_guard lock(log_mutex);
    log << scenario_name(row.scenario) << " kappa^-1 = " << num(row.kappa_inverse_us) << " us: F = "
        << num(row.fidelity, 8) << " (" << num(row.wall_time_s, 3) << " s)" << std::endl;
  };

  SweepResult result;
  int status = 0;
  try {
    result = sweep_kappa(bases, config.kappa_inverses_us, sweep);
  } catch (const SweepError& e) {
    log << "error: " << e.what() << "\n";
    result = e.partial();
    status = 1;
  }
  write_outputs(dir, config, resolved, result);
  log << "wrote " << (dir / "results.csv").string() << "\n";
  return status;
}

}  // namespace catghz
