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

#include <benchmark/benchmark.h>

#include "psig/bn/pairing.hpp"
#include "psig/directory.hpp"
#include "psig/pkg.hpp"
#include "psig/proxy.hpp"

using namespace psig;

namespace {

constexpr int64_t kNow = 1700000000;

struct Fixture {
  SeededEntropy rng{99};
  SystemParams params;
  MasterKey master;
  DirectoryStore directory;
  ConfirmationRegistry confirmations;
  SignerKey orig, prox;
  RegistrationRecord rec_o, rec_p;
  ProxyKey proxy_key;
  ProxySignature signature;

  Fixture() {
    auto [p, mk] = setup(kSuiteId, rng);
    params = p;
    master = mk;
    const auto enroll = [&](const std::string& id, SignerKey& key, RegistrationRecord& rec) {
      auto [factors, bp] = make_binding_parameters(id, params.suite_id, rng);
      const auto token = confirmations.begin(id, rng, kNow);
      const auto issue = issue_partial_key(bp, token, confirmations, master, directory, kNow);
      key = unblind(issue.d, factors, id, params.suite_id);
      rec = issue.record;
    };
    enroll("orig@bench", orig, rec_o);
    enroll("prox@bench", prox, rec_p);
    Warrant w;
    w.original_identity = "orig@bench";
    w.proxy_identity = "prox@bench";
    w.valid_from = kNow - 10;
    w.valid_until = kNow + 86400;
    const Delegation d = create_delegation(orig, w, prox.public_key, params);
    proxy_key = derive_proxy_key(d, prox, rec_o, params);
    signature = proxy_sign(proxy_key, as_bytes("bench message"), rng, kNow, params);
  }
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

void BM_Pairing(benchmark::State& state) {
  auto& f = fixture();
  const auto a = f.orig.public_key;
  const auto b = f.params.pkg_public_key;
  for (auto _ : state) benchmark::DoNotOptimize(pairing(a, b));
}
BENCHMARK(BM_Pairing);

void BM_GeneratorMul(benchmark::State& state) {
  auto& f = fixture();
  Scalar k = Scalar::random_nonzero(f.rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GroupElement::generator_mul(k));
    k = k + Scalar::one();
  }
}
BENCHMARK(BM_GeneratorMul);

void BM_ElementMul(benchmark::State& state) {
  auto& f = fixture();
  const GroupElement p = f.orig.public_key;
  Scalar k = Scalar::random_nonzero(f.rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.mul(k));
    k = k + Scalar::one();
  }
}
BENCHMARK(BM_ElementMul);

void BM_HashToGroup(benchmark::State& state) {
  auto& f = fixture();
  uint64_t i = 0;
  for (auto _ : state) {
    const std::string id = "user" + std::to_string(i++) + "@bench";
    benchmark::DoNotOptimize(hash_to_group_h2(f.params.suite_id, as_bytes(id)));
  }
}
BENCHMARK(BM_HashToGroup);

void BM_ElementDecode(benchmark::State& state) {
  auto& f = fixture();
  const auto enc = f.orig.public_key.encode();
  for (auto _ : state) benchmark::DoNotOptimize(GroupElement::decode(enc));
}
BENCHMARK(BM_ElementDecode);

void BM_KeyIssuance(benchmark::State& state) {
  auto& f = fixture();
  static uint64_t i = 0;  // benchmark reruns the loop; identities must stay fresh
  for (auto _ : state) {
    const std::string id = "issue" + std::to_string(i++) + "@bench";
    auto [factors, bp] = make_binding_parameters(id, f.params.suite_id, f.rng);
    const auto token = f.confirmations.begin(id, f.rng, kNow);
    const auto issue =
        issue_partial_key(bp, token, f.confirmations, f.master, f.directory, kNow);
    benchmark::DoNotOptimize(unblind(issue.d, factors, id, f.params.suite_id));
  }
}
BENCHMARK(BM_KeyIssuance);

void BM_ProxySign(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(proxy_sign(f.proxy_key, as_bytes("bench message"), f.rng, kNow, f.params));
}
BENCHMARK(BM_ProxySign);

void BM_Verify(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_proxy_signature(f.signature, f.rec_o, f.rec_p, f.params,
                                                    RevocationPolicy::strict, kNow));
}
BENCHMARK(BM_Verify);

}  // namespace

BENCHMARK_MAIN();
