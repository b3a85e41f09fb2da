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

#ifndef PSIG_BYTES_HPP
#define PSIG_BYTES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psig {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

inline BytesView as_bytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(BytesView b) {
  return std::string(b.begin(), b.end());
}

inline void append(Bytes& out, BytesView b) { out.insert(out.end(), b.begin(), b.end()); }

inline void append_u8(Bytes& out, uint8_t v) { out.push_back(v); }

inline void append_u32be(Bytes& out, uint32_t v) {
  out.push_back(uint8_t(v >> 24));
  out.push_back(uint8_t(v >> 16));
  out.push_back(uint8_t(v >> 8));
  out.push_back(uint8_t(v));
}

inline void append_u64be(Bytes& out, uint64_t v) {
  append_u32be(out, uint32_t(v >> 32));
  append_u32be(out, uint32_t(v));
}

inline void append_prefixed(Bytes& out, BytesView b) {
  append_u32be(out, uint32_t(b.size()));
  append(out, b);
}

// Sequential reader used by the wire decoders; all getters return nullopt
// past the end instead of throwing.
class ByteReader {
 public:
  explicit ByteReader(BytesView data) : data_(data) {}

  bool done() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }

  std::optional<uint8_t> u8() {
    if (remaining() < 1) return std::nullopt;
    return data_[pos_++];
  }

  std::optional<uint32_t> u32be() {
    if (remaining() < 4) return std::nullopt;
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
    return v;
  }

  std::optional<uint64_t> u64be() {
    if (remaining() < 8) return std::nullopt;
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
    return v;
  }

  std::optional<BytesView> take(size_t n) {
    if (remaining() < n) return std::nullopt;
    BytesView v = data_.subspan(pos_, n);
    pos_ += n;
    return v;
  }

  std::optional<BytesView> prefixed(size_t max_len = 1 << 24) {
    auto n = u32be();
    if (!n || *n > max_len) return std::nullopt;
    return take(*n);
  }

 private:
  BytesView data_;
  size_t pos_ = 0;
};

std::string to_hex(BytesView b);
std::optional<Bytes> from_hex(std::string_view s);

// True if `needle` occurs as a contiguous substring of `haystack`.
bool contains_bytes(BytesView haystack, BytesView needle);

}  // namespace psig

#endif  // PSIG_BYTES_HPP
