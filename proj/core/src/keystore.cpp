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

#include "psig/keystore.hpp"

#include <openssl/evp.h>

#include <fstream>

#include "psig/errors.hpp"

namespace psig {

namespace {

constexpr std::string_view kMagic = "PSIGKEY1";
constexpr size_t kSaltLen = 16;
constexpr size_t kNonceLen = 12;
constexpr size_t kTagLen = 16;
constexpr size_t kKeyLen = 32;

std::array<uint8_t, kKeyLen> derive_key(std::string_view passphrase, BytesView salt,
                                        uint32_t iterations) {
  std::array<uint8_t, kKeyLen> key;
  if (PKCS5_PBKDF2_HMAC(passphrase.data(), int(passphrase.size()), salt.data(),
                        int(salt.size()), int(iterations), EVP_sha256(), int(key.size()),
                        key.data()) != 1)
    throw KeystoreError("key derivation failed");
  return key;
}

struct CipherCtx {
  EVP_CIPHER_CTX* p = EVP_CIPHER_CTX_new();
  ~CipherCtx() { EVP_CIPHER_CTX_free(p); }
};

}  // namespace

Bytes seal_container(BytesView payload, std::string_view passphrase, EntropySource& rng,
                     uint32_t kdf_iterations) {
  Bytes out;
  append(out, as_bytes(kMagic));
  Bytes salt(kSaltLen), nonce(kNonceLen);
  rng.fill(salt);
  rng.fill(nonce);
  append(out, salt);
  append_u32be(out, kdf_iterations);
  append(out, nonce);

  const auto key = derive_key(passphrase, salt, kdf_iterations);

  CipherCtx ctx;
  if (!ctx.p || EVP_EncryptInit_ex(ctx.p, EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
    throw KeystoreError("cipher init failed");
  int len = 0;
  // header is authenticated as AAD
  if (EVP_EncryptUpdate(ctx.p, nullptr, &len, out.data(), int(out.size())) != 1)
    throw KeystoreError("aad failed");

  Bytes ct(payload.size() + kTagLen);
  if (EVP_EncryptUpdate(ctx.p, ct.data(), &len, payload.data(), int(payload.size())) != 1)
    throw KeystoreError("encrypt failed");
  int total = len;
  if (EVP_EncryptFinal_ex(ctx.p, ct.data() + total, &len) != 1)
    throw KeystoreError("encrypt finalize failed");
  total += len;
  if (EVP_CIPHER_CTX_ctrl(ctx.p, EVP_CTRL_GCM_GET_TAG, kTagLen, ct.data() + total) != 1)
    throw KeystoreError("tag extraction failed");
  total += kTagLen;
  ct.resize(total);

  append_u32be(out, uint32_t(ct.size()));
  append(out, ct);
  return out;
}

Bytes open_container(BytesView container, std::string_view passphrase) {
  ByteReader r(container);
  auto magic = r.take(kMagic.size());
  if (!magic || to_string(*magic) != kMagic) throw KeystoreError("not a key container");
  auto salt = r.take(kSaltLen);
  auto iters = r.u32be();
  auto nonce = r.take(kNonceLen);
  if (!salt || !iters || !nonce) throw KeystoreError("container truncated");
  auto ct = r.prefixed(1 << 24);
  if (!ct || !r.done() || ct->size() < kTagLen) throw KeystoreError("container truncated");

  const size_t header_len = kMagic.size() + kSaltLen + 4 + kNonceLen;
  const auto key = derive_key(passphrase, *salt, *iters);

  CipherCtx ctx;
  if (!ctx.p || EVP_DecryptInit_ex(ctx.p, EVP_aes_256_gcm(), nullptr, key.data(), nonce->data()) != 1)
    throw KeystoreError("cipher init failed");
  int len = 0;
  if (EVP_DecryptUpdate(ctx.p, nullptr, &len, container.data(), int(header_len)) != 1)
    throw KeystoreError("aad failed");

  const size_t pt_len = ct->size() - kTagLen;
  Bytes pt(pt_len + 16);
  if (EVP_DecryptUpdate(ctx.p, pt.data(), &len, ct->data(), int(pt_len)) != 1)
    throw KeystoreError("decrypt failed");
  int total = len;
  Bytes tag(ct->end() - kTagLen, ct->end());
  if (EVP_CIPHER_CTX_ctrl(ctx.p, EVP_CTRL_GCM_SET_TAG, kTagLen, tag.data()) != 1)
    throw KeystoreError("tag set failed");
  if (EVP_DecryptFinal_ex(ctx.p, pt.data() + total, &len) != 1)
    throw KeystoreError();  // authentication failure: wrong passphrase or tampered file
  total += len;
  pt.resize(total);
  return pt;
}

void write_container_file(const std::filesystem::path& path, BytesView payload,
                          std::string_view passphrase, EntropySource& rng) {
  if (const auto dir = path.parent_path(); !dir.empty()) std::filesystem::create_directories(dir);
  const Bytes data = seal_container(payload, passphrase, rng);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

Bytes read_container_file(const std::filesystem::path& path, std::string_view passphrase) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KeystoreError("cannot open key container: " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return open_container(data, passphrase);
}

}  // namespace psig
