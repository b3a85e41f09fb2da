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
// The trusted Private Key Generator role: master key, identity
// confirmation, binding-parameter validation, blinded partial-key issuance
// and the public registration directory including revocation.

#ifndef PSIG_PKG_HPP
#define PSIG_PKG_HPP

#include <map>
#include <utility>

#include "psig/directory.hpp"
#include "psig/pairing_core.hpp"

namespace psig {

struct RevokeRequest;  // proxy protocol message, defined in psig/proxy.hpp

struct MasterKey {
  Scalar s;
  SystemParams params;

  // params.pkg_public_key must equal s * generator; checked when a stored
  // master key is loaded.
  bool consistent() const {
    return GroupElement::generator_mul(s) == params.pkg_public_key;
  }
};

// Blinded commitments (X, Y, Z, W) = (a*Pub, ab*Pub, b*P, ab*P) sent to the
// PKG over the public channel together with the identity.
struct BindingParameters {
  GroupElement x, y, z, w;
  std::string identity;
};

struct ConfirmationToken {
  std::string identity;
  std::array<uint8_t, 32> nonce{};
  int64_t expiry = 0;
};

inline constexpr int64_t kConfirmationTtlSeconds = 15 * 60;

// PKG-side book-keeping of outstanding confirmation tokens. Tokens are
// single use: redeem erases them.
class ConfirmationRegistry {
 public:
  ConfirmationToken begin(const std::string& identity, EntropySource& rng, int64_t now,
                          int64_t ttl_seconds = kConfirmationTtlSeconds);

  // Throws ConfirmationInvalidError if the token is unknown, already used,
  // expired, or bound to a different identity.
  void redeem(const ConfirmationToken& token, const std::string& identity, int64_t now);

  size_t outstanding() const { return tokens_.size(); }

  Bytes serialize() const;
  static ConfirmationRegistry deserialize(BytesView in);

 private:
  // keyed by nonce
  std::map<std::array<uint8_t, 32>, ConfirmationToken> tokens_;
};

// (params, master key) for a fresh deployment. Throws
// UnsupportedSuiteError for anything but the built-in suite.
std::pair<SystemParams, MasterKey> setup(std::string_view suite_id, EntropySource& rng);

// The KeyGen well-formedness check:
//   e(Y, P) = e(X, Z) = e(Pub, W)  with Pub = H2(identity).
bool check_binding_parameters(const BindingParameters& bp, const SystemParams& params);

struct PartialKeyIssue {
  GroupElement d;  // D = s * Y, safe for the public channel
  RegistrationRecord record;
};

// Issues the blinded partial key and publishes the registration record.
// Throws ConfirmationInvalidError, BindingCheckFailedError,
// IdentityAlreadyRegisteredError.
PartialKeyIssue issue_partial_key(const BindingParameters& bp, const ConfirmationToken& token,
                                  ConfirmationRegistry& confirmations, const MasterKey& mk,
                                  DirectoryStore& directory, int64_t now);

// Directory lookup including revoked records. Throws NotFoundError.
RegistrationRecord lookup_registration(const std::string& identity,
                                       const DirectoryStore& directory);

struct RevocationResult {
  std::string original_identity;
  std::string proxy_identity;
};

// Validates e(Rev, P) = e(Reg_o, Pub_o) * e(H1(M_r, Pub_o, Pub_p), psi_o)
// and revokes both the original and proxy signer records. Throws
// InvalidRevokeSignatureError, UnknownIdentityError, AlreadyRevokedError.
RevocationResult process_revoke_request(const RevokeRequest& req, DirectoryStore& directory,
                                        const SystemParams& params, int64_t now);

}  // namespace psig

#endif  // PSIG_PKG_HPP
