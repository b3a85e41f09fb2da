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

#ifndef PSIG_DETAIL_HASH_HPP
#define PSIG_DETAIL_HASH_HPP

#include <array>

#include "psig/bytes.hpp"

namespace psig::detail {

std::array<uint8_t, 32> sha256(BytesView data);

// expand_message_xmd with SHA-256 (RFC 9380 section 5.3.1).
Bytes expand_message_xmd(BytesView msg, BytesView dst, size_t len_in_bytes);

}  // namespace psig::detail

#endif  // PSIG_DETAIL_HASH_HPP
