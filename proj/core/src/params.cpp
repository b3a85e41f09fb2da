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

#include "psig/pairing_core.hpp"

namespace psig {

namespace {
constexpr std::string_view kParamsMagic = "PSIGPAR1";
}

std::array<uint8_t, 32> SystemParams::group_order_be() {
  std::array<uint8_t, 32> out;
  bn::limbs_to_bytes_be(out, bn::kModulusR);
  return out;
}

Bytes SystemParams::encode() const {
  Bytes out;
  append(out, as_bytes(kParamsMagic));
  append_prefixed(out, as_bytes(suite_id));
  append(out, generator.encode());
  append(out, pkg_public_key.encode());
  return out;
}

std::optional<SystemParams> SystemParams::decode(BytesView in) {
  ByteReader r(in);
  auto magic = r.take(kParamsMagic.size());
  if (!magic || to_string(*magic) != kParamsMagic) return std::nullopt;
  auto suite = r.prefixed(256);
  if (!suite) return std::nullopt;
  auto gen_bytes = r.take(GroupElement::kEncodedSize);
  auto pub_bytes = r.take(GroupElement::kEncodedSize);
  if (!gen_bytes || !pub_bytes || !r.done()) return std::nullopt;
  auto gen = GroupElement::decode(std::span<const uint8_t, GroupElement::kEncodedSize>(
      gen_bytes->data(), GroupElement::kEncodedSize));
  auto pub = GroupElement::decode(std::span<const uint8_t, GroupElement::kEncodedSize>(
      pub_bytes->data(), GroupElement::kEncodedSize));
  if (!gen || !pub) return std::nullopt;
  SystemParams p{to_string(*suite), *gen, *pub};
  if (!p.validate()) return std::nullopt;
  return p;
}

bool SystemParams::validate() const {
  if (suite_id != kSuiteId) return false;
  if (generator != GroupElement::generator()) return false;
  if (pkg_public_key.is_identity()) return false;
  return pkg_public_key.halves_consistent();
}

}  // namespace psig
