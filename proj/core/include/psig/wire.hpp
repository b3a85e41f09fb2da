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
// Byte formats for the files the roles exchange over the public channel,
// plus the plaintext payloads of the local encrypted key containers. Every
// decoder re-validates group elements (canonical bytes, subgroup, mirrored
// halves) and the suite id. See docs/formats.md for the layouts.

#ifndef PSIG_WIRE_HPP
#define PSIG_WIRE_HPP

#include <filesystem>

#include "psig/pkg.hpp"
#include "psig/proxy.hpp"

namespace psig {

// --- public-channel message files -----------------------------------------

struct BindingRequestFile {
  BindingParameters bp;
  std::array<uint8_t, 32> confirmation_nonce{};
};

struct PartialKeyFile {
  std::string identity;
  GroupElement d;
};

Bytes encode_binding_request(std::string_view suite, const BindingRequestFile& f);
BindingRequestFile decode_binding_request(std::string_view suite, BytesView in);

Bytes encode_partial_key(std::string_view suite, const PartialKeyFile& f);
PartialKeyFile decode_partial_key(std::string_view suite, BytesView in);

Bytes encode_warrant_file(std::string_view suite, const Warrant& w);
Warrant decode_warrant_file(std::string_view suite, BytesView in);

Bytes encode_delegation(std::string_view suite, const Delegation& d);
Delegation decode_delegation(std::string_view suite, BytesView in);

Bytes encode_signature(std::string_view suite, const ProxySignature& sig);
ProxySignature decode_signature(std::string_view suite, BytesView in);

Bytes encode_revoke_request(std::string_view suite, const RevokeRequest& req);
RevokeRequest decode_revoke_request(std::string_view suite, BytesView in);

// --- local keystore payloads (always stored inside sealed containers) -----

Bytes encode_master_payload(const MasterKey& mk);
MasterKey decode_master_payload(BytesView in);

Bytes encode_signer_payload(std::string_view suite, const SignerKey& key);
SignerKey decode_signer_payload(std::string_view suite, BytesView in);

struct PendingRequest {
  std::string identity;
  BindingFactors factors;
};

Bytes encode_pending_payload(std::string_view suite, const PendingRequest& p);
PendingRequest decode_pending_payload(std::string_view suite, BytesView in);

Bytes encode_proxy_key_payload(std::string_view suite, const ProxyKey& pk);
ProxyKey decode_proxy_key_payload(std::string_view suite, BytesView in);

// --- file helpers ----------------------------------------------------------

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, BytesView data);

}  // namespace psig

#endif  // PSIG_WIRE_HPP
