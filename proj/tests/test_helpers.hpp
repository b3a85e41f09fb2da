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

#ifndef PSIG_TESTS_TEST_HELPERS_HPP
#define PSIG_TESTS_TEST_HELPERS_HPP

#include <string>
#include <utility>

#include "psig/directory.hpp"
#include "psig/pkg.hpp"
#include "psig/proxy.hpp"
#include "psig/signer.hpp"

namespace psig::test {

inline constexpr int64_t kNow = 1700000000;

// Fresh PKG with an in-memory directory and helpers running the full key
// issuance flow, keeping every intermediate value visible to assertions.
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
    return {factors, bp, issue.d, issue.record,
            unblind(issue.d, factors, identity, params.suite_id)};
  }
};

inline Warrant make_warrant(const std::string& orig, const std::string& proxy,
                            BytesView prefix = {}, int64_t from = kNow - 60,
                            int64_t until = kNow + 3600) {
  Warrant w;
  w.original_identity = orig;
  w.proxy_identity = proxy;
  w.message_qualification = Bytes(prefix.begin(), prefix.end());
  w.valid_from = from;
  w.valid_until = until;
  return w;
}

// A random non-identity element with consistent halves; the standard way to
// perturb a protocol field in tamper tests.
inline GroupElement random_element(EntropySource& rng) {
  return GroupElement::generator_mul(Scalar::random_nonzero(rng));
}

}  // namespace psig::test

#endif  // PSIG_TESTS_TEST_HELPERS_HPP
