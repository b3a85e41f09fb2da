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

#include "test_helpers.hpp"

using namespace psig;
using namespace psig::test;

TEST_CASE("binding parameters pass the pkg check and use fresh randomness") {
  SeededEntropy rng(1);
  auto [params, mk] = setup(kSuiteId, rng);
  auto [f1, bp1] = make_binding_parameters("alice@x", params.suite_id, rng);
  auto [f2, bp2] = make_binding_parameters("alice@x", params.suite_id, rng);
  CHECK(check_binding_parameters(bp1, params));
  CHECK(check_binding_parameters(bp2, params));
  CHECK(bp1.x != bp2.x);
  CHECK(f1.a != f2.a);
}

TEST_CASE("unit binding factors collapse the tuple to known points") {
  SeededEntropy rng(2);
  auto [params, mk] = setup(kSuiteId, rng);
  const BindingFactors unit{Scalar::one(), Scalar::one()};
  const BindingParameters bp = binding_parameters_from_factors("alice@x", params.suite_id, unit);
  const GroupElement pub = hash_to_group_h2(params.suite_id, as_bytes("alice@x"));
  CHECK(bp.x == pub);
  CHECK(bp.y == pub);
  CHECK(bp.z == params.generator);
  CHECK(bp.w == params.generator);
  CHECK(check_binding_parameters(bp, params));
}

TEST_CASE("validate_partial_key agrees with a direct recomputation oracle") {
  SeededEntropy rng(3);
  Deployment dep(rng);

  // 100 honest and 100 tampered inputs against the oracle D = s*Y
  for (int i = 0; i < 100; ++i) {
    const std::string id = "u" + std::to_string(i) + "@x";
    auto [f, bp] = make_binding_parameters(id, dep.params.suite_id, rng);

    const GroupElement honest_d = bp.y.mul(dep.master.s);
    CHECK(validate_partial_key(honest_d, bp, dep.params));

    const GroupElement tampered = (i % 2 == 0) ? honest_d + dep.params.generator
                                               : honest_d + random_element(rng);
    CHECK(!validate_partial_key(tampered, bp, dep.params));
  }

  // cross-wiring two sessions: D issued for one request fails another
  auto [fa, bpa] = make_binding_parameters("alice@x", dep.params.suite_id, rng);
  auto [fb, bpb] = make_binding_parameters("bob@x", dep.params.suite_id, rng);
  const GroupElement da = bpa.y.mul(dep.master.s);
  CHECK(validate_partial_key(da, bpa, dep.params));
  CHECK(!validate_partial_key(da, bpb, dep.params));
}

TEST_CASE("unblinding recovers s*b*Pub for 100 random factor pairs") {
  SeededEntropy rng(4);
  Deployment dep(rng);
  for (int i = 0; i < 100; ++i) {
    const std::string id = "s" + std::to_string(i) + "@x";
    const BindingFactors f{Scalar::random_nonzero(rng), Scalar::random_nonzero(rng)};
    const BindingParameters bp = binding_parameters_from_factors(id, dep.params.suite_id, f);
    const GroupElement d = bp.y.mul(dep.master.s);

    const SignerKey key = unblind(d, f, id, dep.params.suite_id);
    // computed directly with the test-exposed master key
    const GroupElement expected =
        hash_to_group_h2(dep.params.suite_id, as_bytes(id)).mul(dep.master.s * f.b);
    CHECK(key.private_key == expected);
    CHECK(key.b == f.b);
  }
}

TEST_CASE("test-forced a = 1 makes S equal D") {
  SeededEntropy rng(5);
  Deployment dep(rng);
  const BindingFactors f{Scalar::one(), Scalar::random_nonzero(rng)};
  const BindingParameters bp = binding_parameters_from_factors("alice@x", dep.params.suite_id, f);
  const GroupElement d = bp.y.mul(dep.master.s);
  const SignerKey key = unblind(d, f, "alice@x", dep.params.suite_id);
  CHECK(key.private_key == d);
}

TEST_CASE("directory consistency holds for honest keys and fails for wrong unblinding") {
  SeededEntropy rng(6);
  Deployment dep(rng);
  const auto e = dep.enroll("alice@x");
  CHECK(check_directory_consistency(e.key, e.record, dep.params));

  // unblinding with a wrong a' yields a key failing the directory check
  BindingFactors wrong = e.factors;
  wrong.a = wrong.a + Scalar::one();
  const SignerKey bad = unblind(e.d, wrong, "alice@x", dep.params.suite_id);
  CHECK(!check_directory_consistency(bad, e.record, dep.params));
}

TEST_CASE("escrow freedom: the issuance transcript never contains the private key") {
  SeededEntropy rng(7);
  Deployment dep(rng);
  const auto e = dep.enroll("alice@x");

  // the full public transcript of the key issuance stage
  const std::vector<GroupElement> transcript = {e.bp.x, e.bp.y, e.bp.z, e.bp.w,
                                                e.d,    e.record.token};
  for (const auto& t : transcript) CHECK(t != e.key.private_key);

  Bytes transcript_bytes;
  for (const auto& t : transcript) append(transcript_bytes, t.encode());
  append(transcript_bytes, as_bytes(e.bp.identity));
  const auto s_enc = e.key.private_key.encode();
  CHECK(!contains_bytes(transcript_bytes, s_enc));
  // neither binding factor appears either
  CHECK(!contains_bytes(transcript_bytes, e.factors.a.encode()));
  CHECK(!contains_bytes(transcript_bytes, e.factors.b.encode()));
}
