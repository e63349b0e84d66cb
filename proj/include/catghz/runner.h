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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "catghz/analysis.h"
#include "catghz/config.h"

namespace catghz {

struct RunOptions {
  bool check_only = false;
  std::optional<std::string> scenario;  // run only this scenario
  std::optional<std::string> output_dir;
  std::optional<std::size_t> workers;
  std::optional<int> truncation;  // applied to all three cavities
};

// Worker count from CATGHZ_WORKERS, else the hardware concurrency.
std::size_t default_workers();

// Applies command-line overrides to a loaded config.
RunConfig apply_overrides(RunConfig config, const RunOptions& options);

// Gate time, detunings, effective rates, constraint residuals and quality
// factors of a configuration.
std::string derived_report(const RunConfig& config);

std::string results_csv(const std::vector<SweepRow>& rows);

// Runs the sweep and writes results.csv, summary.txt, metadata.json and one
// fidelity_<scenario>.dat file per scenario. Returns the process exit status.
int run(const RunConfig& config, const RunOptions& options, std::ostream& log);

}  // namespace catghz
