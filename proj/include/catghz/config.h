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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "catghz/analysis.h"
#include "catghz/params.h"

namespace catghz {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioEntry {
  Scenario model = Scenario::full_with_errors;
  bool decoherence = true;

  bool operator==(const ScenarioEntry&) const = default;
};

struct RunConfig {
  SystemParams params;
  // Replace g2 and g3 by the solution of the coupling constraint.
  bool design = true;
  std::vector<ScenarioEntry> scenarios{{Scenario::full_with_errors, true},
                                       {Scenario::effective_with_crosstalk, true}};
  std::vector<double> kappa_inverses_us{100, 200, 300, 400, 500, 600, 700, 800, 900};
  IntegrationSettings integration;
  std::string output_dir = "results";
  std::uint64_t seed = 0;  // reserved; the dynamics are deterministic

  bool operator==(const RunConfig&) const = default;
};

// Parameters after applying the design flag.
SystemParams resolved_params(const RunConfig& config);

// Parses JSON text. Blank text yields the defaults. `source` names the input
// in diagnostics.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

// Checks the config and the physics relations of its resolved parameters.
void validate(const RunConfig& config);

std::string serialize(const RunConfig& config);

}  // namespace catghz
