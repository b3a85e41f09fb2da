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

#include "psig/rng.hpp"

#include <openssl/rand.h>

#include <cstring>
#include <stdexcept>

#include "psig/detail/hash.hpp"

namespace psig {

void SystemEntropy::fill(std::span<uint8_t> out) {
  if (RAND_bytes(out.data(), int(out.size())) != 1)
    throw std::runtime_error("system entropy unavailable");
}

SeededEntropy::SeededEntropy(uint64_t seed) {
  uint8_t b[8];
  for (int i = 0; i < 8; ++i) b[i] = uint8_t(seed >> (8 * i));
  state_ = detail::sha256({b, 8});
}

SeededEntropy::SeededEntropy(BytesView seed) { state_ = detail::sha256(seed); }

void SeededEntropy::fill(std::span<uint8_t> out) {
  std::lock_guard lk(mu_);
  size_t done = 0;
  while (done < out.size()) {
    if (avail_ == 0) {
      Bytes block(state_.begin(), state_.end());
      for (int i = 0; i < 8; ++i) block.push_back(uint8_t(counter_ >> (8 * i)));
      ++counter_;
      block_ = detail::sha256(block);
      avail_ = block_.size();
    }
    const size_t n = std::min(avail_, out.size() - done);
    std::memcpy(out.data() + done, block_.data() + (block_.size() - avail_), n);
    avail_ -= n;
    done += n;
  }
}

}  // namespace psig
