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
//
// Executable adversarial scenarios over the protocol modules. Each scenario
// runs a control arm (honest behaviour must be accepted) and an adversarial
// arm with fixed, mechanical attack strategies whose outputs must all be
// rejected. Hardness assumptions are not tested here; the scenarios only
// witness that the implemented checks reject structurally derivable
// forgeries, deterministically under a seed.

#ifndef PSIG_THREATS_HPP
#define PSIG_THREATS_HPP

#include <string>
#include <vector>

#include "psig/proxy.hpp"

namespace psig {

struct ScenarioReport {
  enum class Expected { all_rejected, all_accepted };

  std::string scenario_name;
  int trials = 0;
  Expected expected = Expected::all_rejected;
  int observed_failures = 0;

  bool passed() const { return observed_failures == 0; }
  std::string to_line() const;
};

// Re-issuance and overwrite attempts against an already-registered identity
// are denied, as are issuance attempts without a valid confirmation.
ScenarioReport run_registration_replacement_scenario(int trials, uint64_t seed);

// A wiretapper holding the full key-issuance transcript (X, Y, Z, W, ID, D,
// Reg) cannot produce anything passing the private-key directory
// consistency check: D itself fails, and so do `trials` random linear
// combinations of the transcript points. Honest unblinding passes.
ScenarioReport run_interception_scenario(int trials, uint64_t seed);

// Deriving a second private key from an issued one: signatures under any
// mutated S (additive shift or scalar multiple) fail verification against
// the unchanged registration token.
ScenarioReport run_key_mutation_scenario(int trials, uint64_t seed);

// Challenger-adversary shell: the adversary adaptively queries proxy-key
// and proxy-sign oracles, then tries to assemble a signature on a fresh
// message from the answers (message replay, R/V splicing, cross-proxy
// splicing). Oracle answers themselves verify; all assembled forgeries must
// fail.
ScenarioReport run_adaptive_oracle_game(int queries, uint64_t seed);

struct ScenarioConfig {
  int registration_trials = 20;
  int interception_trials = 100;
  int mutation_trials = 20;
  int oracle_queries = 20;
  uint64_t seed = 1;
};

std::vector<ScenarioReport> run_all_scenarios(const ScenarioConfig& cfg);

}  // namespace psig

#endif  // PSIG_THREATS_HPP
