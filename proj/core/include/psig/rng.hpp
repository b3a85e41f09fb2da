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

#ifndef PSIG_RNG_HPP
#define PSIG_RNG_HPP

#include <array>
#include <cstdint>
#include <mutex>
#include <span>

#include "psig/bytes.hpp"

namespace psig {

class EntropySource {
 public:
  virtual ~EntropySource() = default;
  virtual void fill(std::span<uint8_t> out) = 0;
};

// OS randomness via the OpenSSL DRBG.
class SystemEntropy final : public EntropySource {
 public:
  void fill(std::span<uint8_t> out) override;
};

// Deterministic SHA-256 counter generator for seeded test runs.
class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(uint64_t seed);
  explicit SeededEntropy(BytesView seed);
  void fill(std::span<uint8_t> out) override;

 private:
  std::array<uint8_t, 32> state_;
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t avail_ = 0;
  std::mutex mu_;
};

}  // namespace psig

#endif  // PSIG_RNG_HPP
