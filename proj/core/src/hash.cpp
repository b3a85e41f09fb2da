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

#include "psig/detail/hash.hpp"

#include <openssl/evp.h>

#include <cassert>
#include <stdexcept>

namespace psig::detail {

std::array<uint8_t, 32> sha256(BytesView data) {
  std::array<uint8_t, 32> out;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32)
    throw std::runtime_error("sha256 failed");
  return out;
}

namespace {

class Sha256Stream {
 public:
  Sha256Stream() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1)
      throw std::runtime_error("sha256 init failed");
  }
  ~Sha256Stream() { EVP_MD_CTX_free(ctx_); }
  Sha256Stream(const Sha256Stream&) = delete;
  Sha256Stream& operator=(const Sha256Stream&) = delete;

  void update(BytesView d) {
    if (EVP_DigestUpdate(ctx_, d.data(), d.size()) != 1)
      throw std::runtime_error("sha256 update failed");
  }

  std::array<uint8_t, 32> finish() {
    std::array<uint8_t, 32> out;
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_, out.data(), &len) != 1 || len != 32)
      throw std::runtime_error("sha256 final failed");
    return out;
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace

Bytes expand_message_xmd(BytesView msg, BytesView dst, size_t len_in_bytes) {
  constexpr size_t b_in_bytes = 32;
  constexpr size_t s_in_bytes = 64;
  const size_t ell = (len_in_bytes + b_in_bytes - 1) / b_in_bytes;
  assert(ell <= 255 && len_in_bytes <= 65535 && dst.size() <= 255);

  Bytes dst_prime(dst.begin(), dst.end());
  dst_prime.push_back(uint8_t(dst.size()));

  const std::array<uint8_t, s_in_bytes> z_pad{};
  const uint8_t l_i_b_str[2] = {uint8_t(len_in_bytes >> 8), uint8_t(len_in_bytes)};

  Sha256Stream h0;
  h0.update(z_pad);
  h0.update(msg);
  h0.update(l_i_b_str);
  const uint8_t zero = 0;
  h0.update({&zero, 1});
  h0.update(dst_prime);
  const auto b_0 = h0.finish();

  Bytes out;
  out.reserve(ell * b_in_bytes);
  std::array<uint8_t, 32> b_prev{};
  for (size_t i = 1; i <= ell; ++i) {
    std::array<uint8_t, 32> xored;  // b_prev is zero for i = 1
    for (size_t j = 0; j < 32; ++j) xored[j] = b_0[j] ^ b_prev[j];
    Sha256Stream h;
    h.update(xored);
    const uint8_t idx = uint8_t(i);
    h.update({&idx, 1});
    h.update(dst_prime);
    b_prev = h.finish();
    out.insert(out.end(), b_prev.begin(), b_prev.end());
  }
  out.resize(len_in_bytes);
  return out;
}

}  // namespace psig::detail
