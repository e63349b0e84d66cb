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


// Command-line entry point: catghz run <config> [options]

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "catghz/config.h"
#include "catghz/runner.h"

int main(int argc, char** argv) {
  CLI::App app{"Three-cavity cat-qubit GHZ protocol simulator"};
  app.require_subcommand(1);

  std::string config_path;
  catghz::RunOptions options;
  std::string scenario;
  std::string out_dir;
  std::size_t workers = 0;
  int truncation = 0;

  CLI::App* run = app.add_subcommand("run", "Run the kappa sweep described by a JSON config");
  run->add_option("config", config_path, "Config file (JSON); an empty file selects the defaults")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_flag("--check-only", options.check_only, "Validate the config and print derived rates");
  auto* scenario_opt = run->add_option("--scenario", scenario, "Run only this scenario");
  auto* out_opt = run->add_option("--out", out_dir, "Output directory (overrides output.directory)");
  auto* workers_opt = run->add_option("--workers", workers, "Parallel sweep workers (default: $CATGHZ_WORKERS)")
                          ->check(CLI::PositiveNumber);
  auto* trunc_opt =
      run->add_option("--truncation", truncation, "Fock truncation for every cavity")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (*scenario_opt) options.scenario = scenario;
  if (*out_opt) options.output_dir = out_dir;
  if (*workers_opt) options.workers = workers;
  if (*trunc_opt) options.truncation = truncation;

  try {
    const catghz::RunConfig config = catghz::apply_overrides(catghz::load_config(config_path), options);
    return catghz::run(config, options, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
