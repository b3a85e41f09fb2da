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
// Passphrase-encrypted containers for key material at rest. Secrets only
// ever touch disk inside these (PBKDF2-HMAC-SHA256 + AES-256-GCM); every
// file exchanged between roles is plaintext protocol data.

#ifndef PSIG_KEYSTORE_HPP
#define PSIG_KEYSTORE_HPP

#include <filesystem>

#include "psig/bytes.hpp"
#include "psig/rng.hpp"

namespace psig {

inline constexpr uint32_t kKeystoreKdfIterations = 32768;

Bytes seal_container(BytesView payload, std::string_view passphrase, EntropySource& rng,
                     uint32_t kdf_iterations = kKeystoreKdfIterations);

// Throws KeystoreError on wrong passphrase or corrupt container.
Bytes open_container(BytesView container, std::string_view passphrase);

void write_container_file(const std::filesystem::path& path, BytesView payload,
                          std::string_view passphrase, EntropySource& rng);
Bytes read_container_file(const std::filesystem::path& path, std::string_view passphrase);

}  // namespace psig

#endif  // PSIG_KEYSTORE_HPP
