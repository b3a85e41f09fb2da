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

#include "psig/keystore.hpp"
#include "psig/wire.hpp"
#include "test_helpers.hpp"

using namespace psig;
using namespace psig::test;

TEST_CASE("message files survive an encode/decode round trip") {
  SeededEntropy rng(1);
  Deployment dep(rng);
  const auto alice = dep.enroll("alice@x");
  const auto bob = dep.enroll("bob@x");
  const Warrant w = make_warrant("alice@x", "bob@x", as_bytes("pfx"));

  BindingRequestFile brf;
  brf.bp = alice.bp;
  rng.fill(brf.confirmation_nonce);
  const auto brf2 = decode_binding_request(kSuiteId, encode_binding_request(kSuiteId, brf));
  CHECK(brf2.bp.identity == "alice@x");
  CHECK(brf2.bp.y == alice.bp.y);
  CHECK(brf2.confirmation_nonce == brf.confirmation_nonce);

  const auto pkf = decode_partial_key(kSuiteId, encode_partial_key(kSuiteId, {"alice@x", alice.d}));
  CHECK(pkf.d == alice.d);

  const Warrant w2 = decode_warrant_file(kSuiteId, encode_warrant_file(kSuiteId, w));
  CHECK(w2 == w);

  const Delegation d = create_delegation(alice.key, w, bob.key.public_key, dep.params);
  const Delegation d2 = decode_delegation(kSuiteId, encode_delegation(kSuiteId, d));
  CHECK(d2.u_o == d.u_o);
  CHECK(validate_delegation(d2, alice.record, dep.params));

  const ProxyKey pk = derive_proxy_key(d, bob.key, alice.record, dep.params);
  const ProxySignature sig = proxy_sign(pk, as_bytes("pfx hello"), rng, kNow, dep.params);
  const ProxySignature sig2 = decode_signature(kSuiteId, encode_signature(kSuiteId, sig));
  CHECK(verify_proxy_signature(sig2, alice.record, bob.record, dep.params,
                               RevocationPolicy::strict, kNow) == VerifyStatus::ok);

  const RevokeRequest rr = create_revoke_request(alice.key, w, as_bytes("r"), dep.params);
  const RevokeRequest rr2 = decode_revoke_request(kSuiteId, encode_revoke_request(kSuiteId, rr));
  CHECK(rr2.rev == rr.rev);
  CHECK(rr2.m_r == rr.m_r);
}

TEST_CASE("decoders reject wrong magic, wrong suite, truncation, and trailing bytes") {
  SeededEntropy rng(2);
  Deployment dep(rng);
  const auto alice = dep.enroll("alice@x");

  const Bytes good = encode_partial_key(kSuiteId, {"alice@x", alice.d});

  CHECK_THROWS_AS(decode_binding_request(kSuiteId, good), DecodeError);  // wrong magic

  Bytes truncated(good.begin(), good.end() - 3);
  CHECK_THROWS_AS(decode_partial_key(kSuiteId, truncated), DecodeError);

  Bytes trailing = good;
  trailing.push_back(0);
  CHECK_THROWS_AS(decode_partial_key(kSuiteId, trailing), DecodeError);

  CHECK_THROWS_AS(decode_partial_key("psig-other-suite/", good), DecodeError);

  // an in-band corrupted element is caught by full element validation
  Bytes corrupt = good;
  corrupt[corrupt.size() - 10] ^= 0x5a;
  CHECK_THROWS_AS(decode_partial_key(kSuiteId, corrupt), DecodeError);
}

TEST_CASE("sealed containers round-trip and authenticate") {
  SeededEntropy rng(3);
  const Bytes payload = to_bytes("secret payload bytes");
  const Bytes sealed = seal_container(payload, "hunter2", rng);

  CHECK(open_container(sealed, "hunter2") == payload);
  CHECK_THROWS_AS(open_container(sealed, "wrong"), KeystoreError);

  Bytes tampered = sealed;
  tampered[tampered.size() - 1] ^= 1;
  CHECK_THROWS_AS(open_container(tampered, "hunter2"), KeystoreError);

  Bytes not_container = to_bytes("nope");
  CHECK_THROWS_AS(open_container(not_container, "hunter2"), KeystoreError);

  // the sealed container never embeds the plaintext
  CHECK(!contains_bytes(sealed, payload));
}

TEST_CASE("keystore payloads round-trip, including the consistency check on master keys") {
  SeededEntropy rng(4);
  Deployment dep(rng);
  const auto alice = dep.enroll("alice@x");

  const MasterKey mk2 = decode_master_payload(encode_master_payload(dep.master));
  CHECK(mk2.s == dep.master.s);

  // a master payload whose scalar disagrees with the public key is refused
  MasterKey wrong = dep.master;
  wrong.s = wrong.s + Scalar::one();
  CHECK_THROWS_AS(decode_master_payload(encode_master_payload(wrong)), DecodeError);

  const SignerKey k2 = decode_signer_payload(kSuiteId, encode_signer_payload(kSuiteId, alice.key));
  CHECK(k2.private_key == alice.key.private_key);
  CHECK(k2.b == alice.key.b);
  CHECK(k2.public_key == alice.key.public_key);

  const PendingRequest p{"alice@x", alice.factors};
  const PendingRequest p2 = decode_pending_payload(kSuiteId, encode_pending_payload(kSuiteId, p));
  CHECK(p2.factors.a == alice.factors.a);
  CHECK(p2.factors.b == alice.factors.b);

  const auto bob = dep.enroll("bob@x");
  const Warrant w = make_warrant("alice@x", "bob@x");
  const Delegation d = create_delegation(alice.key, w, bob.key.public_key, dep.params);
  const ProxyKey pk = derive_proxy_key(d, bob.key, alice.record, dep.params);
  const ProxyKey pk2 = decode_proxy_key_payload(kSuiteId, encode_proxy_key_payload(kSuiteId, pk));
  CHECK(pk2.v_p == pk.v_p);
  CHECK(pk2.warrant == pk.warrant);
}
