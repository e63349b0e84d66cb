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


#include "catghz/config.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace catghz {

namespace {

using nlohmann::json;

std::string describe(json::value_t type) {
  switch (type) {
    case json::value_t::object:
      return "object";
    case json::value_t::array:
      return "array";
    case json::value_t::string:
      return "string";
    case json::value_t::boolean:
      return "boolean";
    case json::value_t::null:
      return "null";
    default:
      return "number";
  }
}

// Walks one JSON object, remembering which keys were read so that leftovers
// can be reported as unknown.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_, "expected an object, got " + describe(node_.type()));
  }

  ~Section() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.count(key)) fail(child(key), "unknown key");
    }
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return node_.contains(key);
  }
  const json& at(const std::string& key) {
    seen_.insert(key);
    return node_.at(key);
  }
  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  void read(const std::string& key, double& out) {
    if (has(key)) out = number(at(key), child(key));
  }
  void read(const std::string& key, bool& out) {
    if (!has(key)) return;
    const json& v = at(key);
    if (!v.is_boolean()) fail(child(key), "expected a boolean, got " + describe(v.type()));
    out = v.get<bool>();
  }
  void read(const std::string& key, std::string& out) {
    if (!has(key)) return;
    const json& v = at(key);
    if (!v.is_string()) fail(child(key), "expected a string, got " + describe(v.type()));
    out = v.get<std::string>();
  }
  void read(const std::string& key, std::array<double, 3>& out) {
    if (!has(key)) return;
    const json& v = at(key);
    if (!v.is_array() || v.size() != 3) fail(child(key), "expected an array of 3 numbers");
    for (std::size_t i = 0; i < 3; ++i) out[i] = number(v[i], child(key) + "[" + std::to_string(i) + "]");
  }
  void read(const std::string& key, std::array<int, 3>& out) {
    if (!has(key)) return;
    const json& v = at(key);
    if (!v.is_array() || v.size() != 3) fail(child(key), "expected an array of 3 integers");
    for (std::size_t i = 0; i < 3; ++i) out[i] = integer(v[i], child(key) + "[" + std::to_string(i) + "]");
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& message) {
    throw ConfigError("field '" + path + "': " + message);
  }

  static double number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number, got " + describe(v.type()));
    return v.get<double>();
  }
  static int integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer, got " + describe(v.type()));
    return v.get<int>();
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string crosstalk_name(CrosstalkPairs pairs) { return pairs == CrosstalkPairs::all ? "all" : "pair23"; }

CrosstalkPairs parse_crosstalk(const std::string& name) {
  if (name == "all") return CrosstalkPairs::all;
  if (name == "pair23") return CrosstalkPairs::pair23;
  Section::fail("system.crosstalk_pairs", "expected \"all\" or \"pair23\", got \"" + name + "\"");
}

void read_system(const json& node, RunConfig& c) {
  Section s(node, "system");
  SystemParams& p = c.params;
  s.read("nu_c_ghz", p.nu_c_ghz);
  s.read("nu_eg_ghz", p.nu_eg_ghz);
  s.read("nu_fe_ghz", p.nu_fe_ghz);
  s.read("g_mhz", p.g_mhz);
  s.read("gt_mhz", p.gt_mhz);
  s.read("crosstalk_ratio", p.crosstalk_ratio);
  std::string pairs = crosstalk_name(p.crosstalk_pairs);
  s.read("crosstalk_pairs", pairs);
  p.crosstalk_pairs = parse_crosstalk(pairs);
  s.read("alpha", p.alpha);
  s.read("truncations", p.truncations);
  s.read("design", c.design);
}

void read_decoherence(const json& node, SystemParams& p) {
  Section s(node, "decoherence");
  s.read("gamma_eg_per_us", p.gamma_eg_per_us);
  s.read("gamma_fe_per_us", p.gamma_fe_per_us);
  s.read("gamma_fg_per_us", p.gamma_fg_per_us);
  s.read("gamma_phi_e_per_us", p.gamma_phi_e_per_us);
  s.read("gamma_phi_f_per_us", p.gamma_phi_f_per_us);
}

void read_scenarios(const json& node, RunConfig& c) {
  if (!node.is_array()) Section::fail("scenarios", "expected an array, got " + describe(node.type()));
  c.scenarios.clear();
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string path = "scenarios[" + std::to_string(i) + "]";
    ScenarioEntry entry;
    if (node[i].is_string()) {
      try {
        entry.model = parse_scenario(node[i].get<std::string>());
      } catch (const std::invalid_argument& e) {
        Section::fail(path, e.what());
      }
    } else {
      Section s(node[i], path);
      std::string model;
      if (!s.has("model")) Section::fail(path, "missing key 'model'");
      s.read("model", model);
      try {
        entry.model = parse_scenario(model);
      } catch (const std::invalid_argument& e) {
        Section::fail(s.child("model"), e.what());
      }
      s.read("decoherence", entry.decoherence);
    }
    c.scenarios.push_back(entry);
  }
}

void read_sweep(const json& node, RunConfig& c) {
  Section s(node, "sweep");
  if (!s.has("kappa_inverse_us")) return;
  const json& v = s.at("kappa_inverse_us");
  if (!v.is_array()) Section::fail("sweep.kappa_inverse_us", "expected an array of numbers");
  c.kappa_inverses_us.clear();
  for (std::size_t i = 0; i < v.size(); ++i) {
    c.kappa_inverses_us.push_back(Section::number(v[i], "sweep.kappa_inverse_us[" + std::to_string(i) + "]"));
  }
}

void read_integration(const json& node, IntegrationSettings& settings) {
  Section s(node, "integration");
  if (s.has("method")) {
    const json& v = s.at("method");
    if (v.is_null()) {
      settings.method.reset();
    } else if (!v.is_string()) {
      Section::fail("integration.method", "expected \"rk4\", \"adaptive\" or null");
    } else {
      try {
        settings.method = parse_method(v.get<std::string>());
      } catch (const std::invalid_argument& e) {
        Section::fail("integration.method", e.what());
      }
    }
  }
  s.read("dt_us", settings.dt);
  s.read("steps_per_period", settings.steps_per_period);
  s.read("tolerance", settings.tolerance);
  if (s.has("samples")) {
    const int n = Section::integer(s.at("samples"), "integration.samples");
    if (n < 0) Section::fail("integration.samples", "must be >= 0");
    settings.samples = static_cast<std::size_t>(n);
  }
}

void read_output(const json& node, RunConfig& c) {
  Section s(node, "output");
  s.read("directory", c.output_dir);
}

}  // namespace

SystemParams resolved_params(const RunConfig& config) {
  return config.design ? with_designed_couplings(config.params) : config.params;
}

RunConfig parse_config(const std::string& text, const std::string& source) {
  RunConfig config;
  if (std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); })) {
    return config;
  }
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // The library message already carries line and column.
    throw ConfigError(source + ": " + e.what());
  }
  try {
    Section top(root, "");
    if (top.has("system")) read_system(top.at("system"), config);
    if (top.has("decoherence")) read_decoherence(top.at("decoherence"), config.params);
    if (top.has("scenarios")) read_scenarios(top.at("scenarios"), config);
    if (top.has("sweep")) read_sweep(top.at("sweep"), config);
    if (top.has("integration")) read_integration(top.at("integration"), config.integration);
    if (top.has("output")) read_output(top.at("output"), config);
    if (top.has("seed")) {
      const json& v = top.at("seed");
      if (!v.is_number_unsigned()) Section::fail("seed", "expected a non-negative integer");
      config.seed = v.get<std::uint64_t>();
    }
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

void validate(const RunConfig& config) {
  if (config.scenarios.empty()) throw ConfigError("scenarios: at least one scenario is required");
  if (config.kappa_inverses_us.empty()) throw ConfigError("sweep.kappa_inverse_us: list is empty");
  for (double k : config.kappa_inverses_us) {
    if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("sweep.kappa_inverse_us: values must be finite and > 0");
  }
  const IntegrationSettings& s = config.integration;
  if (!(s.dt >= 0.0)) throw ConfigError("integration.dt_us: must be >= 0 (0 selects the automatic step)");
  if (!(s.steps_per_period > 0.0)) throw ConfigError("integration.steps_per_period: must be > 0");
  if (!(s.tolerance > 0.0 && s.tolerance <= 1e-3)) throw ConfigError("integration.tolerance: must lie in (0, 1e-3]");
  if (config.output_dir.empty()) throw ConfigError("output.directory: must not be empty");
  const SystemParams p = resolved_params(config);
  validate(p);
  derive_detunings(p);
}

std::string serialize(const RunConfig& c) {
  const SystemParams& p = c.params;
  json root;
  root["system"] = {{"nu_c_ghz", p.nu_c_ghz},
                    {"nu_eg_ghz", p.nu_eg_ghz},
                    {"nu_fe_ghz", p.nu_fe_ghz},
                    {"g_mhz", p.g_mhz},
                    {"gt_mhz", p.gt_mhz},
                    {"crosstalk_ratio", p.crosstalk_ratio},
                    {"crosstalk_pairs", crosstalk_name(p.crosstalk_pairs)},
                    {"alpha", p.alpha},
                    {"truncations", p.truncations},
                    {"design", c.design}};
  root["decoherence"] = {{"gamma_eg_per_us", p.gamma_eg_per_us},
                         {"gamma_fe_per_us", p.gamma_fe_per_us},
                         {"gamma_fg_per_us", p.gamma_fg_per_us},
                         {"gamma_phi_e_per_us", p.gamma_phi_e_per_us},
                         {"gamma_phi_f_per_us", p.gamma_phi_f_per_us}};
  json scenarios = json::array();
  for (const auto& s : c.scenarios) {
    scenarios.push_back({{"model", scenario_name(s.model)}, {"decoherence", s.decoherence}});
  }
  root["scenarios"] = scenarios;
  root["sweep"] = {{"kappa_inverse_us", c.kappa_inverses_us}};
  const IntegrationSettings& s = c.integration;
  root["integration"] = {{"method", s.method ? json(method_name(*s.method)) : json(nullptr)},
                         {"dt_us", s.dt},
                         {"steps_per_period", s.steps_per_period},
                         {"tolerance", s.tolerance},
                         {"samples", s.samples}};
  root["output"] = {{"directory", c.output_dir}};
  root["seed"] = c.seed;
  return root.dump(2) + "\n";
}

}  // namespace catghz
