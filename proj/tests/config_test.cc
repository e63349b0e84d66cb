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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

namespace catghz {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "test.json");
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

TEST(ParseConfig, EmptyTextGivesDefaults) {
  const RunConfig c = parse_config("");
  EXPECT_EQ(c, RunConfig{});
  EXPECT_EQ(parse_config("  \n"), RunConfig{});
  EXPECT_EQ(parse_config("{}"), RunConfig{});
  EXPECT_DOUBLE_EQ(c.params.nu_eg_ghz, 6.5);
  EXPECT_DOUBLE_EQ(c.params.nu_fe_ghz, 6.2);
  EXPECT_DOUBLE_EQ(c.params.nu_c_ghz[0], 7.0);
  EXPECT_DOUBLE_EQ(c.params.alpha, 0.5);
  EXPECT_TRUE(c.design);
  EXPECT_EQ(c.kappa_inverses_us.size(), 9u);
  EXPECT_EQ(c.scenarios.size(), 2u);
}

TEST(ParseConfig, OverridingSweepKeepsOtherDefaults) {
  const RunConfig c = parse_config(R"({"sweep": {"kappa_inverse_us": [250, 500]}})");
  EXPECT_EQ(c.kappa_inverses_us, (std::vector<double>{250, 500}));
  RunConfig expected;
  expected.kappa_inverses_us = {250, 500};
  EXPECT_EQ(c, expected);
}

TEST(ParseConfig, FullSchema) {
  const RunConfig c = parse_config(R"({
    "system": {"nu_c_ghz": [7.05, 5.64, 5.63], "g_mhz": [30, 40, 60], "crosstalk_pairs": "pair23",
               "truncations": [6, 5, 4], "design": false},
    "decoherence": {"gamma_phi_e_per_us": 0.01},
    "scenarios": ["full_ideal", {"model": "effective_diagonal", "decoherence": false}],
    "integration": {"method": "adaptive", "tolerance": 1e-8, "samples": 5},
    "output": {"directory": "out"},
    "seed": 42
  })");
  EXPECT_DOUBLE_EQ(c.params.nu_c_ghz[0], 7.05);
  EXPECT_EQ(c.params.crosstalk_pairs, CrosstalkPairs::pair23);
  EXPECT_EQ(c.params.truncations, (std::array<int, 3>{6, 5, 4}));
  EXPECT_FALSE(c.design);
  EXPECT_DOUBLE_EQ(c.params.gamma_phi_e_per_us, 0.01);
  ASSERT_EQ(c.scenarios.size(), 2u);
  EXPECT_EQ(c.scenarios[0], (ScenarioEntry{Scenario::full_ideal, true}));
  EXPECT_EQ(c.scenarios[1], (ScenarioEntry{Scenario::effective_diagonal, false}));
  EXPECT_EQ(c.integration.method, Method::adaptive);
  EXPECT_EQ(c.integration.samples, 5u);
  EXPECT_EQ(c.output_dir, "out");
  EXPECT_EQ(c.seed, 42u);
}

TEST(ParseConfig, DesignFlagSolvesCouplings) {
  const RunConfig c = parse_config("{}");
  const SystemParams p = resolved_params(c);
  EXPECT_NEAR(p.g_mhz[1], 50.495, 1e-3);
  EXPECT_DOUBLE_EQ(c.params.g_mhz[1], 50.5);
}

TEST(ParseConfig, RoundTrip) {
  for (const char* text : {"", R"({"system": {"alpha": 0.45, "design": false}, "scenarios": ["full_ideal"],
                                  "integration": {"method": "rk4", "dt_us": 1e-5}})"}) {
    const RunConfig c = parse_config(text);
    EXPECT_EQ(parse_config(serialize(c)), c);
  }
  RunConfig odd;
  odd.params.nu_fe_ghz = 6.2000000000000002;
  odd.kappa_inverses_us = {1.0 / 3.0};
  EXPECT_EQ(parse_config(serialize(odd)), odd);
}

TEST(ParseConfig, PhysicsViolations) {
  EXPECT_NE(error_of(R"({"system": {"nu_fe_ghz": 6.7}})").find("anharmonicity"), std::string::npos);
  EXPECT_NE(error_of(R"({"system": {"nu_c_ghz": [7.0, 5.8, 5.68]}})").find("D_12"), std::string::npos);
  EXPECT_NE(error_of(R"({"decoherence": {"gamma_eg_per_us": -1}})").find("gamma_eg"), std::string::npos);
}

TEST(ParseConfig, Diagnostics) {
  const std::string syntax = error_of("{\n  \"system\": {\"alpha\": 0.5,}\n}");
  EXPECT_NE(syntax.find("test.json"), std::string::npos);
  EXPECT_NE(syntax.find("line 2"), std::string::npos) << syntax;
  EXPECT_NE(error_of(R"({"system": {"alpha": "big"}})").find("system.alpha"), std::string::npos);
  EXPECT_NE(error_of(R"({"system": {"gamma": 1}})").find("system.gamma"), std::string::npos);
  EXPECT_NE(error_of(R"({"plots": {}})").find("'plots'"), std::string::npos);
  EXPECT_NE(error_of(R"({"scenarios": [{"decoherence": true}]})").find("model"), std::string::npos);
  EXPECT_NE(error_of(R"({"scenarios": ["lab"]})").find("scenarios[0]"), std::string::npos);
  EXPECT_NE(error_of(R"({"scenarios": []})").find("at least one"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"kappa_inverse_us": [0]}})").find("kappa_inverse_us"), std::string::npos);
  EXPECT_NE(error_of(R"({"system": {"truncations": [5, 5]}})").find("system.truncations"), std::string::npos);
  EXPECT_NE(error_of(R"({"integration": {"tolerance": 0.1}})").find("tolerance"), std::string::npos);
  EXPECT_NE(error_of(R"({"integration": {"method": "euler"}})").find("integration.method"), std::string::npos);
  EXPECT_NE(error_of("[1, 2]").find("expected an object"), std::string::npos);
}

TEST(LoadConfig, Files) {
  const auto path = std::filesystem::temp_directory_path() / "catghz_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"seed": 7})";
  }
  EXPECT_EQ(load_config(path.string()).seed, 7u);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path.string()), ConfigError);
}

TEST(LoadConfig, BundledDefault) {
  const RunConfig c = load_config(CATGHZ_SOURCE_DIR "/configs/default.json");
  EXPECT_EQ(c, RunConfig{});
}

}  // namespace
}  // namespace catghz
