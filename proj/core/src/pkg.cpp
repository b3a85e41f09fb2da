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

#include "psig/pkg.hpp"

#include "psig/proxy.hpp"

namespace psig {

namespace {

// Identities are non-empty and must not contain ';' so revoke messages
// (identity;reason) stay parseable.
void require_valid_identity(const std::string& identity) {
  if (identity.empty() || identity.find(';') != std::string::npos)
    throw ConfirmationInvalidError("invalid identity string");
}

}  // namespace

ConfirmationToken ConfirmationRegistry::begin(const std::string& identity, EntropySource& rng,
                                              int64_t now, int64_t ttl_seconds) {
  require_valid_identity(identity);
  ConfirmationToken t;
  t.identity = identity;
  t.expiry = now + ttl_seconds;
  rng.fill(t.nonce);
  tokens_[t.nonce] = t;
  return t;
}

void ConfirmationRegistry::redeem(const ConfirmationToken& token, const std::string& identity,
                                  int64_t now) {
  const auto it = tokens_.find(token.nonce);
  if (it == tokens_.end())
    throw ConfirmationInvalidError("confirmation token unknown or already used");
  if (it->second.identity != identity || token.identity != identity)
    throw ConfirmationInvalidError("confirmation token bound to a different identity");
  if (now >= it->second.expiry) {
    tokens_.erase(it);
    throw ConfirmationInvalidError("confirmation token expired");
  }
  tokens_.erase(it);  // single use
}

Bytes ConfirmationRegistry::serialize() const {
  Bytes out;
  append_u32be(out, uint32_t(tokens_.size()));
  for (const auto& [nonce, t] : tokens_) {
    append(out, nonce);
    append_prefixed(out, as_bytes(t.identity));
    append_u64be(out, uint64_t(t.expiry));
  }
  return out;
}

ConfirmationRegistry ConfirmationRegistry::deserialize(BytesView in) {
  ConfirmationRegistry reg;
  ByteReader r(in);
  const auto count = r.u32be();
  if (!count) throw DecodeError("confirmation registry truncated");
  for (uint32_t i = 0; i < *count; ++i) {
    auto nonce = r.take(32);
    auto identity = r.prefixed(1 << 16);
    auto expiry = r.u64be();
    if (!nonce || !identity || !expiry) throw DecodeError("confirmation registry truncated");
    ConfirmationToken t;
    std::copy(nonce->begin(), nonce->end(), t.nonce.begin());
    t.identity = to_string(*identity);
    t.expiry = int64_t(*expiry);
    reg.tokens_[t.nonce] = t;
  }
  if (!r.done()) throw DecodeError("confirmation registry has trailing bytes");
  return reg;
}

std::pair<SystemParams, MasterKey> setup(std::string_view suite_id, EntropySource& rng) {
  if (suite_id != kSuiteId) throw UnsupportedSuiteError("unknown suite: " + std::string(suite_id));
  const Scalar s = Scalar::random_nonzero(rng);
  SystemParams params;
  params.suite_id = std::string(suite_id);
  params.generator = GroupElement::generator();
  params.pkg_public_key = GroupElement::generator_mul(s);
  return {params, MasterKey{s, params}};
}

bool check_binding_parameters(const BindingParameters& bp, const SystemParams& params) {
  if (bp.identity.empty()) return false;
  const GroupElement pub = hash_to_group_h2(params.suite_id, as_bytes(bp.identity));
  const GtElement lhs = pairing(bp.y, params.generator);
  if (lhs != pairing(bp.x, bp.z)) return false;
  return lhs == pairing(pub, bp.w);
}

PartialKeyIssue issue_partial_key(const BindingParameters& bp, const ConfirmationToken& token,
                                  ConfirmationRegistry& confirmations, const MasterKey& mk,
                                  DirectoryStore& directory, int64_t now) {
  require_valid_identity(bp.identity);
  confirmations.redeem(token, bp.identity, now);
  if (directory.lookup(bp.identity)) throw IdentityAlreadyRegisteredError();
  if (!check_binding_parameters(bp, mk.params)) throw BindingCheckFailedError();

  PartialKeyIssue issue;
  issue.d = bp.y.mul(mk.s);  // D = s*Y, blinded by a*b
  const GroupElement reg_token = bp.z.mul(mk.s);

  DirectoryEvent ev;
  ev.type = DirectoryEvent::Type::issuance;
  ev.identity = bp.identity;
  ev.token = reg_token;
  ev.timestamp = now;
  directory.append(ev);

  issue.record = *directory.lookup(bp.identity);
  return issue;
}

RegistrationRecord lookup_registration(const std::string& identity,
                                       const DirectoryStore& directory) {
  auto rec = directory.lookup(identity);
  if (!rec) throw NotFoundError("no registration record for \"" + identity + "\"");
  return *rec;
}

RevocationResult process_revoke_request(const RevokeRequest& req, DirectoryStore& directory,
                                        const SystemParams& params, int64_t now) {
  const auto parsed = parse_revoke_message(req.m_r);
  if (!parsed) throw InvalidRevokeSignatureError("revoke message not parseable");
  const std::string& named_identity = parsed->first;
  if (named_identity != req.warrant.original_identity)
    throw InvalidRevokeSignatureError("revoke message names a different identity");

  auto reg_o = directory.lookup(req.warrant.original_identity);
  auto reg_p = directory.lookup(req.warrant.proxy_identity);
  if (!reg_o || !reg_p) throw UnknownIdentityError();
  if (!reg_o->active() || !reg_p->active()) throw AlreadyRevokedError();

  // The transmitted public keys must be the identity hashes.
  if (req.pub_o != hash_to_group_h2(params.suite_id, as_bytes(req.warrant.original_identity)) ||
      req.pub_p != hash_to_group_h2(params.suite_id, as_bytes(req.warrant.proxy_identity)))
    throw InvalidRevokeSignatureError("public keys do not match the named identities");

  // e(Rev, P) = e(Reg_o, Pub_o) * e(H1(M_r, Pub_o, Pub_p), psi_o)
  const GroupElement h1 = hash_to_group_h1(params.suite_id, req.m_r, req.pub_o, req.pub_p);
  const GtElement lhs = pairing(req.rev, params.generator);
  const GtElement rhs = pairing(reg_o->token, req.pub_o) * pairing(h1, req.psi_o);
  if (lhs != rhs) throw InvalidRevokeSignatureError();

  const std::string reason(req.m_r.begin(), req.m_r.end());
  std::vector<const RegistrationRecord*> targets{&*reg_o};
  if (reg_p->identity != reg_o->identity) targets.push_back(&*reg_p);
  for (const auto* rec : targets) {
    DirectoryEvent ev;
    ev.type = DirectoryEvent::Type::revocation;
    ev.identity = rec->identity;
    ev.token = rec->token;
    ev.reason = reason;
    ev.timestamp = now;
    directory.append(ev);
  }
  return {req.warrant.original_identity, req.warrant.proxy_identity};
}

}  // namespace psig
