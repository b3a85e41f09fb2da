// Copyright 2026 The psig Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psig/threats.hpp"

using namespace psig;

TEST_CASE("registration replacement scenario rejects every takeover attempt") {
  const auto r = run_registration_replacement_scenario(5, 1);
  CHECK(r.scenario_name == "registration-replacement");
  CHECK(r.trials == 5);
  CHECK(r.expected == ScenarioReport::Expected::all_rejected);
  CHECK(r.observed_failures == 0);
}

TEST_CASE("interception scenario: transcript combinations never pass as private keys") {
  const auto r = run_interception_scenario(25, 2);
  CHECK(r.observed_failures == 0);
}

TEST_CASE("key mutation scenario: mutated keys cannot sign") {
  const auto r = run_key_mutation_scenario(5, 3);
  CHECK(r.observed_failures == 0);
}

TEST_CASE("adaptive oracle game: replayed and spliced answers never verify") {
  const auto r = run_adaptive_oracle_game(4, 4);
  CHECK(r.observed_failures == 0);
}

TEST_CASE("scenario runs are deterministic under a seed") {
  const auto a = run_key_mutation_scenario(3, 42);
  const auto b = run_key_mutation_scenario(3, 42);
  CHECK(a.to_line() == b.to_line());
  CHECK(a.observed_failures == b.observed_failures);
}

TEST_CASE("run_all_scenarios covers all four scenarios") {
  ScenarioConfig cfg;
  cfg.registration_trials = 2;
  cfg.interception_trials = 5;
  cfg.mutation_trials = 2;
  cfg.oracle_queries = 2;
  cfg.seed = 7;
  const auto reports = run_all_scenarios(cfg);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    INFO(r.to_line());
    CHECK(r.passed());
  }
}
