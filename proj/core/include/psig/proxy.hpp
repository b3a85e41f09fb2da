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
// Delegation and signing core: warrants, delegation creation/validation,
// proxy-key derivation, proxy signatures, verification, and revoke
// requests.

#ifndef PSIG_PROXY_HPP
#define PSIG_PROXY_HPP

#include "psig/signer.hpp"

namespace psig {

// Delegation warrant m_w. The message qualification is a literal prefix:
// a message is covered iff it starts with these bytes (empty = any
// message). Enforced at both signing and verification time.
struct Warrant {
  std::string original_identity;
  std::string proxy_identity;
  Bytes message_qualification;
  int64_t valid_from = 0;
  int64_t valid_until = 0;

  bool message_allowed(BytesView msg) const;
  bool time_valid(int64_t now) const { return valid_from <= now && now < valid_until; }
  bool well_formed() const {
    return !original_identity.empty() && !proxy_identity.empty() && valid_from < valid_until;
  }

  // Injective length-prefixed byte encoding; this is the m_w that gets
  // hashed.
  Bytes encode() const;
  static std::optional<Warrant> decode(BytesView in);

  bool operator==(const Warrant& o) const = default;
};

// (m_w, U_o, psi_o, Pub_o) sent from the original signer to the proxy.
struct Delegation {
  Warrant warrant;
  GroupElement u_o;    // U_o = S_o + b_o * H1(m_w, Pub_o, Pub_p)
  GroupElement psi_o;  // b_o * P
  GroupElement pub_o;
};

struct ProxyKey {
  GroupElement v_p;  // V_p = U_o + S_p + b_p * H1(m_w, Pub_o, Pub_p)
  Warrant warrant;
  GroupElement psi_o, psi_p;
  GroupElement pub_o, pub_p;
};

// The 8-tuple (m_w, m, R, V, psi_o, psi_p, Pub_o, Pub_p).
struct ProxySignature {
  Warrant warrant;
  Bytes message;
  GroupElement r_point;  // R = r * P
  GroupElement v;        // V = (r + a)^-1 * V_p
  GroupElement psi_o, psi_p;
  GroupElement pub_o, pub_p;
};

// (M_r, m_w, Rev, Pub_o, Pub_p, psi_o) sent to the PKG (and proxy signer).
struct RevokeRequest {
  Bytes m_r;  // "identity;reason"
  Warrant warrant;
  GroupElement rev;  // Rev = S_o + b_o * H1(M_r, Pub_o, Pub_p)
  GroupElement pub_o, pub_p;
  GroupElement psi_o;
};

// M_r layout: identity, one ';', then the free-form reason.
Bytes revoke_message(std::string_view identity, BytesView reason);
// Splits M_r back into (identity, reason); nullopt when no ';' present.
std::optional<std::pair<std::string, Bytes>> parse_revoke_message(BytesView m_r);

// Throws IdentityMismatchError unless the warrant names ok.identity as the
// original signer and pub_p matches H2(warrant.proxy_identity).
Delegation create_delegation(const SignerKey& ok, const Warrant& warrant,
                             const GroupElement& pub_p, const SystemParams& params);

// e(U_o, P) == e(psi_o, H1(m_w, Pub_o, Pub_p)) * e(Pub_o, Reg_o)
// Throws RevokedDelegatorError when reg_o is not active, and
// IdentityMismatchError when reg_o does not belong to the warrant's
// original signer.
bool validate_delegation(const Delegation& d, const RegistrationRecord& reg_o,
                         const SystemParams& params);

// Validates the delegation then derives the proxy key. Throws
// InvalidDelegationError / IdentityMismatchError.
ProxyKey derive_proxy_key(const Delegation& d, const SignerKey& pk,
                          const RegistrationRecord& reg_o, const SystemParams& params);

// Signs under the warrant. Throws WarrantViolationError when the message
// fails the qualification or `now` is outside the validity window.
ProxySignature proxy_sign(const ProxyKey& pk, BytesView message, EntropySource& rng,
                          int64_t now, const SystemParams& params);

enum class RevocationPolicy { strict, lenient };

enum class VerifyStatus {
  ok,
  identity_binding_failure,   // embedded Pub does not match H2 of the warrant
  record_mismatch,            // registration records don't match the warrant
  revoked_signer,             // strict policy and a revoked record
  warrant_message_violation,  // message outside the qualification
  warrant_time_violation,     // now outside the validity window
  equation_failed,            // the four-pairing equation does not hold
};

const char* to_string(VerifyStatus s);

// The ProxySignVerify predicate plus the warrant and revocation policy
// checks. Returns ok iff everything holds.
VerifyStatus verify_proxy_signature(const ProxySignature& sig, const RegistrationRecord& reg_o,
                                    const RegistrationRecord& reg_p, const SystemParams& params,
                                    RevocationPolicy policy, int64_t now);

// Builds the revoke request for the given warrant. Throws
// IdentityMismatchError unless ok is the warrant's original signer.
RevokeRequest create_revoke_request(const SignerKey& ok, const Warrant& warrant,
                                    BytesView reason, const SystemParams& params);

}  // namespace psig

#endif  // PSIG_PROXY_HPP
