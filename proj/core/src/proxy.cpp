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

#include "psig/proxy.hpp"

#include <algorithm>

namespace psig {

bool Warrant::message_allowed(BytesView msg) const {
  if (msg.size() < message_qualification.size()) return false;
  return std::equal(message_qualification.begin(), message_qualification.end(), msg.begin());
}

Bytes Warrant::encode() const {
  Bytes out;
  append_prefixed(out, as_bytes(original_identity));
  append_prefixed(out, as_bytes(proxy_identity));
  append_prefixed(out, message_qualification);
  append_u64be(out, uint64_t(valid_from));
  append_u64be(out, uint64_t(valid_until));
  return out;
}

std::optional<Warrant> Warrant::decode(BytesView in) {
  ByteReader r(in);
  auto orig = r.prefixed(1 << 16);
  auto proxy = r.prefixed(1 << 16);
  auto qual = r.prefixed(1 << 20);
  auto from = r.u64be();
  auto until = r.u64be();
  if (!orig || !proxy || !qual || !from || !until || !r.done()) return std::nullopt;
  Warrant w;
  w.original_identity = to_string(*orig);
  w.proxy_identity = to_string(*proxy);
  w.message_qualification = Bytes(qual->begin(), qual->end());
  w.valid_from = int64_t(*from);
  w.valid_until = int64_t(*until);
  if (!w.well_formed()) return std::nullopt;
  return w;
}

Bytes revoke_message(std::string_view identity, BytesView reason) {
  Bytes m = to_bytes(identity);
  m.push_back(';');
  append(m, reason);
  return m;
}

std::optional<std::pair<std::string, Bytes>> parse_revoke_message(BytesView m_r) {
  const auto it = std::find(m_r.begin(), m_r.end(), uint8_t(';'));
  if (it == m_r.end()) return std::nullopt;
  std::string identity(m_r.begin(), it);
  if (identity.empty()) return std::nullopt;
  return std::make_pair(std::move(identity), Bytes(it + 1, m_r.end()));
}

Delegation create_delegation(const SignerKey& ok, const Warrant& warrant,
                             const GroupElement& pub_p, const SystemParams& params) {
  if (!warrant.well_formed()) throw Error("malformed warrant");
  if (warrant.original_identity != ok.identity)
    throw IdentityMismatchError("warrant names a different original signer");
  if (pub_p != hash_to_group_h2(params.suite_id, as_bytes(warrant.proxy_identity)))
    throw IdentityMismatchError("proxy public key does not match the warrant");

  const Bytes m_w = warrant.encode();
  const GroupElement h1 = hash_to_group_h1(params.suite_id, m_w, ok.public_key, pub_p);
  Delegation d;
  d.warrant = warrant;
  d.u_o = ok.private_key + h1.mul(ok.b);  // U_o = S_o + b_o * H1
  d.psi_o = GroupElement::generator_mul(ok.b);
  d.pub_o = ok.public_key;
  return d;
}

bool validate_delegation(const Delegation& d, const RegistrationRecord& reg_o,
                         const SystemParams& params) {
  if (reg_o.identity != d.warrant.original_identity)
    throw IdentityMismatchError("registration record does not match the warrant");
  if (!reg_o.active()) throw RevokedDelegatorError();
  if (d.pub_o != hash_to_group_h2(params.suite_id, as_bytes(d.warrant.original_identity)))
    return false;
  const GroupElement pub_p =
      hash_to_group_h2(params.suite_id, as_bytes(d.warrant.proxy_identity));
  const GroupElement h1 = hash_to_group_h1(params.suite_id, d.warrant.encode(), d.pub_o, pub_p);
  // e(U_o, P) = e(psi_o, H1(m_w, Pub_o, Pub_p)) * e(Pub_o, Reg_o)
  return pairing(d.u_o, params.generator) ==
         pairing(d.psi_o, h1) * pairing(d.pub_o, reg_o.token);
}

ProxyKey derive_proxy_key(const Delegation& d, const SignerKey& pk,
                          const RegistrationRecord& reg_o, const SystemParams& params) {
  if (pk.identity != d.warrant.proxy_identity)
    throw IdentityMismatchError("warrant names a different proxy signer");
  if (!validate_delegation(d, reg_o, params)) throw InvalidDelegationError();

  const GroupElement h1 =
      hash_to_group_h1(params.suite_id, d.warrant.encode(), d.pub_o, pk.public_key);
  ProxyKey key;
  key.v_p = d.u_o + pk.private_key + h1.mul(pk.b);  // V_p = U_o + S_p + b_p * H1
  key.warrant = d.warrant;
  key.psi_o = d.psi_o;
  key.psi_p = GroupElement::generator_mul(pk.b);
  key.pub_o = d.pub_o;
  key.pub_p = pk.public_key;
  return key;
}

ProxySignature proxy_sign(const ProxyKey& pk, BytesView message, EntropySource& rng,
                          int64_t now, const SystemParams& params) {
  if (!pk.warrant.message_allowed(message))
    throw WarrantViolationError("message outside the warrant qualification");
  if (!pk.warrant.time_valid(now))
    throw WarrantViolationError("current time outside the delegation window");

  for (;;) {
    const Scalar r = Scalar::random_nonzero(rng);
    const GroupElement r_point = GroupElement::generator_mul(r);
    const Scalar a = hash_to_scalar(params.suite_id, message, r_point, pk.pub_p);
    const Scalar denom = r + a;
    if (denom.is_zero()) continue;  // V = (r+a)^-1 V_p undefined; resample r

    ProxySignature sig;
    sig.warrant = pk.warrant;
    sig.message = Bytes(message.begin(), message.end());
    sig.r_point = r_point;
    sig.v = pk.v_p.mul(denom.inverse());
    sig.psi_o = pk.psi_o;
    sig.psi_p = pk.psi_p;
    sig.pub_o = pk.pub_o;
    sig.pub_p = pk.pub_p;
    return sig;
  }
}

const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::ok:
      return "ok";
    case VerifyStatus::identity_binding_failure:
      return "identity-binding-failure";
    case VerifyStatus::record_mismatch:
      return "record-mismatch";
    case VerifyStatus::revoked_signer:
      return "revoked-signer";
    case VerifyStatus::warrant_message_violation:
      return "warrant-message-violation";
    case VerifyStatus::warrant_time_violation:
      return "warrant-time-violation";
    case VerifyStatus::equation_failed:
      return "verification-equation-failed";
  }
  return "unknown";
}

VerifyStatus verify_proxy_signature(const ProxySignature& sig, const RegistrationRecord& reg_o,
                                    const RegistrationRecord& reg_p, const SystemParams& params,
                                    RevocationPolicy policy, int64_t now) {
  // Identities are authoritative: recompute both public keys from the
  // warrant and require the transmitted points to agree.
  if (!sig.warrant.well_formed()) return VerifyStatus::identity_binding_failure;
  if (sig.pub_o != hash_to_group_h2(params.suite_id, as_bytes(sig.warrant.original_identity)) ||
      sig.pub_p != hash_to_group_h2(params.suite_id, as_bytes(sig.warrant.proxy_identity)))
    return VerifyStatus::identity_binding_failure;
  if (reg_o.identity != sig.warrant.original_identity ||
      reg_p.identity != sig.warrant.proxy_identity)
    return VerifyStatus::record_mismatch;
  if (policy == RevocationPolicy::strict && (!reg_o.active() || !reg_p.active()))
    return VerifyStatus::revoked_signer;
  if (!sig.warrant.message_allowed(sig.message)) return VerifyStatus::warrant_message_violation;
  if (!sig.warrant.time_valid(now)) return VerifyStatus::warrant_time_violation;

  // e(R + h(m, R, Pub_p) P, V)
  //   = e(psi_o + psi_p, H1(m_w, Pub_o, Pub_p)) e(Pub_o, Reg_o) e(Pub_p, Reg_p)
  const Scalar a = hash_to_scalar(params.suite_id, sig.message, sig.r_point, sig.pub_p);
  const GroupElement h1 =
      hash_to_group_h1(params.suite_id, sig.warrant.encode(), sig.pub_o, sig.pub_p);
  const GtElement lhs = pairing(sig.r_point + GroupElement::generator_mul(a), sig.v);
  const GtElement rhs = pairing(sig.psi_o + sig.psi_p, h1) * pairing(sig.pub_o, reg_o.token) *
                        pairing(sig.pub_p, reg_p.token);
  return lhs == rhs ? VerifyStatus::ok : VerifyStatus::equation_failed;
}

RevokeRequest create_revoke_request(const SignerKey& ok, const Warrant& warrant,
                                    BytesView reason, const SystemParams& params) {
  if (warrant.original_identity != ok.identity)
    throw IdentityMismatchError("warrant names a different original signer");
  RevokeRequest req;
  req.m_r = revoke_message(ok.identity, reason);
  req.warrant = warrant;
  req.pub_o = ok.public_key;
  req.pub_p = hash_to_group_h2(params.suite_id, as_bytes(warrant.proxy_identity));
  const GroupElement h1 = hash_to_group_h1(params.suite_id, req.m_r, req.pub_o, req.pub_p);
  req.rev = ok.private_key + h1.mul(ok.b);  // Rev = S_o + b_o * H1(M_r, ...)
  req.psi_o = GroupElement::generator_mul(ok.b);
  return req;
}

}  // namespace psig
