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

#include "psig/wire.hpp"

#include <fstream>

namespace psig {

namespace {

constexpr std::string_view kBindingMagic = "PSIGBRQ1";
constexpr std::string_view kPartialMagic = "PSIGPKY1";
constexpr std::string_view kWarrantMagic = "PSIGWAR1";
constexpr std::string_view kDelegationMagic = "PSIGDEL1";
constexpr std::string_view kSignatureMagic = "PSIGSIG1";
constexpr std::string_view kRevokeMagic = "PSIGREV1";
constexpr std::string_view kMasterMagic = "PSIGMST1";
constexpr std::string_view kSignerMagic = "PSIGSGN1";
constexpr std::string_view kPendingMagic = "PSIGFCT1";
constexpr std::string_view kProxyKeyMagic = "PSIGPXY1";

void write_header(Bytes& out, std::string_view magic, std::string_view suite) {
  append(out, as_bytes(magic));
  append_prefixed(out, as_bytes(suite));
}

// Checks magic and that the embedded suite matches the expected one.
ByteReader read_header(BytesView in, std::string_view magic, std::string_view expected_suite) {
  ByteReader r(in);
  auto m = r.take(magic.size());
  if (!m || to_string(*m) != magic)
    throw DecodeError("wrong file type (expected " + std::string(magic) + ")");
  auto suite = r.prefixed(256);
  if (!suite) throw DecodeError("truncated header");
  if (to_string(*suite) != expected_suite)
    throw DecodeError("suite mismatch: file is for \"" + to_string(*suite) + "\"");
  return r;
}

void write_element(Bytes& out, const GroupElement& e) { append(out, e.encode()); }

GroupElement read_element(ByteReader& r, const char* what) {
  auto bytes = r.take(GroupElement::kEncodedSize);
  if (!bytes) throw DecodeError(std::string("truncated ") + what);
  auto e = GroupElement::decode(std::span<const uint8_t, GroupElement::kEncodedSize>(
      bytes->data(), GroupElement::kEncodedSize));
  if (!e) throw DecodeError(std::string("invalid group element: ") + what);
  return *e;
}

void write_scalar(Bytes& out, const Scalar& s) { append(out, s.encode()); }

Scalar read_scalar(ByteReader& r, const char* what) {
  auto bytes = r.take(Scalar::kEncodedSize);
  if (!bytes) throw DecodeError(std::string("truncated ") + what);
  auto s = Scalar::decode(
      std::span<const uint8_t, Scalar::kEncodedSize>(bytes->data(), Scalar::kEncodedSize));
  if (!s) throw DecodeError(std::string("non-canonical scalar: ") + what);
  return *s;
}

std::string read_identity(ByteReader& r) {
  auto id = r.prefixed(1 << 16);
  if (!id || id->empty()) throw DecodeError("missing identity");
  return to_string(*id);
}

Warrant read_warrant(ByteReader& r) {
  auto bytes = r.prefixed(1 << 20);
  if (!bytes) throw DecodeError("truncated warrant");
  auto w = Warrant::decode(*bytes);
  if (!w) throw DecodeError("malformed warrant");
  return *w;
}

void expect_done(const ByteReader& r) {
  if (!r.done()) throw DecodeError("trailing bytes");
}

}  // namespace

// --- binding request --------------------------------------------------------

Bytes encode_binding_request(std::string_view suite, const BindingRequestFile& f) {
  Bytes out;
  write_header(out, kBindingMagic, suite);
  append_prefixed(out, as_bytes(f.bp.identity));
  write_element(out, f.bp.x);
  write_element(out, f.bp.y);
  write_element(out, f.bp.z);
  write_element(out, f.bp.w);
  append(out, f.confirmation_nonce);
  return out;
}

BindingRequestFile decode_binding_request(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kBindingMagic, suite);
  BindingRequestFile f;
  f.bp.identity = read_identity(r);
  f.bp.x = read_element(r, "X");
  f.bp.y = read_element(r, "Y");
  f.bp.z = read_element(r, "Z");
  f.bp.w = read_element(r, "W");
  auto nonce = r.take(32);
  if (!nonce) throw DecodeError("missing confirmation nonce");
  std::copy(nonce->begin(), nonce->end(), f.confirmation_nonce.begin());
  expect_done(r);
  return f;
}

// --- partial key -------------------------------------------------------------

Bytes encode_partial_key(std::string_view suite, const PartialKeyFile& f) {
  Bytes out;
  write_header(out, kPartialMagic, suite);
  append_prefixed(out, as_bytes(f.identity));
  write_element(out, f.d);
  return out;
}

PartialKeyFile decode_partial_key(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kPartialMagic, suite);
  PartialKeyFile f;
  f.identity = read_identity(r);
  f.d = read_element(r, "D");
  expect_done(r);
  return f;
}

// --- warrant ------------------------------------------------------------------

Bytes encode_warrant_file(std::string_view suite, const Warrant& w) {
  Bytes out;
  write_header(out, kWarrantMagic, suite);
  append_prefixed(out, w.encode());
  return out;
}

Warrant decode_warrant_file(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kWarrantMagic, suite);
  Warrant w = read_warrant(r);
  expect_done(r);
  return w;
}

// --- delegation ----------------------------------------------------------------

Bytes encode_delegation(std::string_view suite, const Delegation& d) {
  Bytes out;
  write_header(out, kDelegationMagic, suite);
  append_prefixed(out, d.warrant.encode());
  write_element(out, d.u_o);
  write_element(out, d.psi_o);
  write_element(out, d.pub_o);
  return out;
}

Delegation decode_delegation(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kDelegationMagic, suite);
  Delegation d;
  d.warrant = read_warrant(r);
  d.u_o = read_element(r, "U_o");
  d.psi_o = read_element(r, "psi_o");
  d.pub_o = read_element(r, "Pub_o");
  expect_done(r);
  return d;
}

// --- proxy signature -------------------------------------------------------------

Bytes encode_signature(std::string_view suite, const ProxySignature& sig) {
  Bytes out;
  write_header(out, kSignatureMagic, suite);
  append_prefixed(out, sig.warrant.encode());
  append_prefixed(out, sig.message);
  write_element(out, sig.r_point);
  write_element(out, sig.v);
  write_element(out, sig.psi_o);
  write_element(out, sig.psi_p);
  write_element(out, sig.pub_o);
  write_element(out, sig.pub_p);
  return out;
}

ProxySignature decode_signature(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kSignatureMagic, suite);
  ProxySignature sig;
  sig.warrant = read_warrant(r);
  auto msg = r.prefixed(1 << 24);
  if (!msg) throw DecodeError("truncated message");
  sig.message = Bytes(msg->begin(), msg->end());
  sig.r_point = read_element(r, "R");
  sig.v = read_element(r, "V");
  sig.psi_o = read_element(r, "psi_o");
  sig.psi_p = read_element(r, "psi_p");
  sig.pub_o = read_element(r, "Pub_o");
  sig.pub_p = read_element(r, "Pub_p");
  expect_done(r);
  return sig;
}

// --- revoke request ---------------------------------------------------------------

Bytes encode_revoke_request(std::string_view suite, const RevokeRequest& req) {
  Bytes out;
  write_header(out, kRevokeMagic, suite);
  append_prefixed(out, req.m_r);
  append_prefixed(out, req.warrant.encode());
  write_element(out, req.rev);
  write_element(out, req.pub_o);
  write_element(out, req.pub_p);
  write_element(out, req.psi_o);
  return out;
}

RevokeRequest decode_revoke_request(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kRevokeMagic, suite);
  RevokeRequest req;
  auto m_r = r.prefixed(1 << 20);
  if (!m_r) throw DecodeError("truncated revoke message");
  req.m_r = Bytes(m_r->begin(), m_r->end());
  req.warrant = read_warrant(r);
  req.rev = read_element(r, "Rev");
  req.pub_o = read_element(r, "Pub_o");
  req.pub_p = read_element(r, "Pub_p");
  req.psi_o = read_element(r, "psi_o");
  expect_done(r);
  return req;
}

// --- keystore payloads --------------------------------------------------------------

Bytes encode_master_payload(const MasterKey& mk) {
  Bytes out;
  write_header(out, kMasterMagic, mk.params.suite_id);
  write_scalar(out, mk.s);
  append_prefixed(out, mk.params.encode());
  return out;
}

MasterKey decode_master_payload(BytesView in) {
  ByteReader r = read_header(in, kMasterMagic, kSuiteId);
  MasterKey mk;
  mk.s = read_scalar(r, "master key");
  auto params_bytes = r.prefixed(1 << 16);
  if (!params_bytes) throw DecodeError("truncated params");
  auto params = SystemParams::decode(*params_bytes);
  if (!params) throw DecodeError("invalid params");
  mk.params = *params;
  expect_done(r);
  if (!mk.consistent()) throw DecodeError("master key does not match the published public key");
  return mk;
}

Bytes encode_signer_payload(std::string_view suite, const SignerKey& key) {
  Bytes out;
  write_header(out, kSignerMagic, suite);
  append_prefixed(out, as_bytes(key.identity));
  write_element(out, key.private_key);
  write_scalar(out, key.b);
  return out;
}

SignerKey decode_signer_payload(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kSignerMagic, suite);
  SignerKey key;
  key.identity = read_identity(r);
  key.private_key = read_element(r, "private key");
  key.b = read_scalar(r, "blinding exponent");
  expect_done(r);
  key.public_key = hash_to_group_h2(suite, as_bytes(key.identity));
  return key;
}

Bytes encode_pending_payload(std::string_view suite, const PendingRequest& p) {
  Bytes out;
  write_header(out, kPendingMagic, suite);
  append_prefixed(out, as_bytes(p.identity));
  write_scalar(out, p.factors.a);
  write_scalar(out, p.factors.b);
  return out;
}

PendingRequest decode_pending_payload(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kPendingMagic, suite);
  PendingRequest p;
  p.identity = read_identity(r);
  p.factors.a = read_scalar(r, "binding factor a");
  p.factors.b = read_scalar(r, "binding factor b");
  expect_done(r);
  return p;
}

Bytes encode_proxy_key_payload(std::string_view suite, const ProxyKey& pk) {
  Bytes out;
  write_header(out, kProxyKeyMagic, suite);
  append_prefixed(out, pk.warrant.encode());
  write_element(out, pk.v_p);
  write_element(out, pk.psi_o);
  write_element(out, pk.psi_p);
  write_element(out, pk.pub_o);
  write_element(out, pk.pub_p);
  return out;
}

ProxyKey decode_proxy_key_payload(std::string_view suite, BytesView in) {
  ByteReader r = read_header(in, kProxyKeyMagic, suite);
  ProxyKey pk;
  pk.warrant = read_warrant(r);
  pk.v_p = read_element(r, "V_p");
  pk.psi_o = read_element(r, "psi_o");
  pk.psi_p = read_element(r, "psi_p");
  pk.pub_o = read_element(r, "Pub_o");
  pk.pub_p = read_element(r, "Pub_p");
  expect_done(r);
  return pk;
}

// --- file helpers ----------------------------------------------------------------------

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, BytesView data) {
  if (const auto dir = path.parent_path(); !dir.empty()) std::filesystem::create_directories(dir);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace psig
