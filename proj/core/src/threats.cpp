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

#include "psig/threats.hpp"

#include <sstream>

#include "psig/directory.hpp"
#include "psig/pkg.hpp"

namespace psig {

namespace {

constexpr int64_t kNow = 1700000000;

// A fresh PKG with an in-memory directory plus helpers to run the full key
// issuance flow for one identity.
struct Deployment {
  SystemParams params;
  MasterKey master;
  DirectoryStore directory;
  ConfirmationRegistry confirmations;
  EntropySource& rng;

  explicit Deployment(EntropySource& r) : rng(r) {
    auto [p, mk] = setup(kSuiteId, rng);
    params = p;
    master = mk;
  }

  struct Enrollment {
    BindingFactors factors;
    BindingParameters bp;
    GroupElement d;
    RegistrationRecord record;
    SignerKey key;
  };

  Enrollment enroll(const std::string& identity) {
    auto [factors, bp] = make_binding_parameters(identity, params.suite_id, rng);
    const ConfirmationToken token = confirmations.begin(identity, rng, kNow);
    const PartialKeyIssue issue =
        issue_partial_key(bp, token, confirmations, master, directory, kNow);
    Enrollment e{factors, bp, issue.d, issue.record,
                 unblind(issue.d, factors, identity, params.suite_id)};
    return e;
  }
};

Warrant open_warrant(const std::string& orig, const std::string& proxy) {
  Warrant w;
  w.original_identity = orig;
  w.proxy_identity = proxy;
  w.valid_from = kNow - 60;
  w.valid_until = kNow + 3600;
  return w;
}

}  // namespace

std::string ScenarioReport::to_line() const {
  std::ostringstream os;
  os << "scenario=" << scenario_name << " trials=" << trials
     << " expected=" << (expected == Expected::all_rejected ? "all-rejected" : "all-accepted")
     << " failures=" << observed_failures << " " << (passed() ? "PASS" : "FAIL");
  return os.str();
}

ScenarioReport run_registration_replacement_scenario(int trials, uint64_t seed) {
  SeededEntropy rng(seed);
  ScenarioReport report{"registration-replacement", trials, ScenarioReport::Expected::all_rejected, 0};

  for (int t = 0; t < trials; ++t) {
    Deployment dep(rng);
    const std::string victim = "alice@example.org";
    try {
      dep.enroll(victim);
    } catch (const Error&) {
      ++report.observed_failures;  // control arm must succeed
      continue;
    }

    // Honest re-issuance request for the same identity.
    try {
      dep.enroll(victim);
      ++report.observed_failures;
    } catch (const IdentityAlreadyRegisteredError&) {
    } catch (const Error&) {
      ++report.observed_failures;
    }

    // Attacker-chosen binding parameters for the registered identity, with
    // a (modelled) stolen confirmation.
    try {
      auto [attacker_factors, attacker_bp] =
          make_binding_parameters(victim, dep.params.suite_id, rng);
      const ConfirmationToken stolen = dep.confirmations.begin(victim, rng, kNow);
      issue_partial_key(attacker_bp, stolen, dep.confirmations, dep.master, dep.directory, kNow);
      ++report.observed_failures;
    } catch (const IdentityAlreadyRegisteredError&) {
    } catch (const Error&) {
      ++report.observed_failures;
    }

    // Pre-registration of an unclaimed identity without any confirmation.
    try {
      auto [f, bp] = make_binding_parameters("bob@example.org", dep.params.suite_id, rng);
      ConfirmationToken forged;
      forged.identity = "bob@example.org";
      rng.fill(forged.nonce);
      forged.expiry = kNow + 600;
      issue_partial_key(bp, forged, dep.confirmations, dep.master, dep.directory, kNow);
      ++report.observed_failures;
    } catch (const ConfirmationInvalidError&) {
    } catch (const Error&) {
      ++report.observed_failures;
    }
  }
  return report;
}

ScenarioReport run_interception_scenario(int trials, uint64_t seed) {
  SeededEntropy rng(seed);
  ScenarioReport report{"interception", trials, ScenarioReport::Expected::all_rejected, 0};

  Deployment dep(rng);
  const auto e = dep.enroll("carol@example.org");

  // What the wiretapper learns: bp (X, Y, Z, W, ID), D and the public Reg.
  const GroupElement pub = hash_to_group_h2(dep.params.suite_id, as_bytes(e.bp.identity));
  const GtElement reg_side = pairing(pub, e.record.token);
  const auto accepts_as_private_key = [&](const GroupElement& candidate) {
    return pairing(candidate, dep.params.generator) == reg_side;
  };

  // Control arm: the honest unblinded key passes.
  if (!accepts_as_private_key(e.key.private_key)) ++report.observed_failures;

  // The intercepted partial key is still blinded by a.
  if (accepts_as_private_key(e.d)) ++report.observed_failures;

  // Randomized search over linear combinations of transcript points.
  for (int t = 0; t < trials; ++t) {
    const GroupElement candidate = e.d.mul(Scalar::random(rng)) +
                                   e.bp.w.mul(Scalar::random(rng)) +
                                   e.bp.y.mul(Scalar::random(rng));
    if (accepts_as_private_key(candidate)) ++report.observed_failures;
  }
  return report;
}

ScenarioReport run_key_mutation_scenario(int trials, uint64_t seed) {
  SeededEntropy rng(seed);
  ScenarioReport report{"key-mutation", trials, ScenarioReport::Expected::all_rejected, 0};

  Deployment dep(rng);
  const auto orig = dep.enroll("dave@example.org");
  const auto prox = dep.enroll("erin@example.org");
  const Warrant warrant = open_warrant(orig.key.identity, prox.key.identity);

  const Delegation d = create_delegation(orig.key, warrant, prox.key.public_key, dep.params);
  const ProxyKey pk = derive_proxy_key(d, prox.key, orig.record, dep.params);
  const Bytes msg = to_bytes("threat-3 message");

  const auto verifies = [&](const ProxyKey& key) {
    const ProxySignature sig = proxy_sign(key, msg, rng, kNow, dep.params);
    return verify_proxy_signature(sig, orig.record, prox.record, dep.params,
                                  RevocationPolicy::strict, kNow) == VerifyStatus::ok;
  };

  if (!verifies(pk)) ++report.observed_failures;  // control arm

  for (int t = 0; t < trials; ++t) {
    // S* = S + delta * Pub shifts V_p by delta * Pub_p.
    ProxyKey shifted = pk;
    shifted.v_p = pk.v_p + prox.key.public_key.mul(Scalar::random_nonzero(rng));
    if (verifies(shifted)) ++report.observed_failures;

    // S* = c * S shifts V_p by (c - 1) * S_p.
    Scalar c = Scalar::random_nonzero(rng);
    if (c == Scalar::one()) c = c + Scalar::one();
    ProxyKey scaled = pk;
    scaled.v_p = pk.v_p + prox.key.private_key.mul(c - Scalar::one());
    if (verifies(scaled)) ++report.observed_failures;
  }
  return report;
}

ScenarioReport run_adaptive_oracle_game(int queries, uint64_t seed) {
  SeededEntropy rng(seed);
  ScenarioReport report{"adaptive-oracle-game", queries, ScenarioReport::Expected::all_rejected, 0};

  // Challenger state: master key, one original signer, proxies on demand.
  Deployment dep(rng);
  const auto orig = dep.enroll("owner@game.example");

  struct ProxyState {
    Deployment::Enrollment enrollment;
    ProxyKey key;
  };
  std::vector<ProxyState> proxies;
  const auto proxy_key_oracle = [&](size_t j) -> ProxyState& {
    while (proxies.size() <= j) {
      const std::string id = "proxy" + std::to_string(proxies.size()) + "@game.example";
      auto e = dep.enroll(id);
      const Warrant w = open_warrant(orig.key.identity, id);
      const Delegation d = create_delegation(orig.key, w, e.key.public_key, dep.params);
      ProxyKey pk = derive_proxy_key(d, e.key, orig.record, dep.params);
      proxies.push_back({std::move(e), std::move(pk)});
    }
    return proxies[j];
  };
  const auto sign_oracle = [&](size_t j, BytesView m) {
    return proxy_sign(proxy_key_oracle(j).key, m, rng, kNow, dep.params);
  };
  const auto verify = [&](const ProxySignature& sig, size_t j) {
    return verify_proxy_signature(sig, orig.record, proxies[j].enrollment.record, dep.params,
                                  RevocationPolicy::strict, kNow);
  };

  const Bytes fresh_message = to_bytes("M* never queried to the sign oracle");

  for (int q = 0; q < queries; ++q) {
    const size_t j = size_t(q) % 2;
    const Bytes m1 = to_bytes("query " + std::to_string(q) + " first");
    const Bytes m2 = to_bytes("query " + std::to_string(q) + " second");
    const ProxySignature s1 = sign_oracle(j, m1);
    const ProxySignature s2 = sign_oracle(j, m2);

    // Game well-formedness: honest oracle answers verify.
    if (verify(s1, j) != VerifyStatus::ok || verify(s2, j) != VerifyStatus::ok)
      ++report.observed_failures;

    // Replay adversary: previous answer with the message swapped to M*.
    ProxySignature replay = s1;
    replay.message = fresh_message;
    if (verify(replay, j) == VerifyStatus::ok) ++report.observed_failures;

    // Splice adversary: R from one answer, V from another, message M*.
    ProxySignature splice = s1;
    splice.message = fresh_message;
    splice.r_point = s1.r_point;
    splice.v = s2.v;
    if (verify(splice, j) == VerifyStatus::ok) ++report.observed_failures;

    // Cross-proxy assembly: answer from proxy j with the other proxy's
    // key material substituted.
    const size_t other = 1 - j;
    proxy_key_oracle(other);
    ProxySignature crossed = s1;
    crossed.message = fresh_message;
    crossed.psi_p = proxies[other].key.psi_p;
    crossed.pub_p = proxies[other].key.pub_p;
    if (verify(crossed, j) == VerifyStatus::ok) ++report.observed_failures;
  }
  return report;
}

std::vector<ScenarioReport> run_all_scenarios(const ScenarioConfig& cfg) {
  return {
      run_registration_replacement_scenario(cfg.registration_trials, cfg.seed),
      run_interception_scenario(cfg.interception_trials, cfg.seed + 1),
      run_key_mutation_scenario(cfg.mutation_trials, cfg.seed + 2),
      run_adaptive_oracle_game(cfg.oracle_queries, cfg.seed + 3),
  };
}

}  // namespace psig
