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

#include <cstring>

#include "psig/bn/pairing.hpp"
#include "psig/detail/hash.hpp"
#include "psig/pairing_core.hpp"

namespace psig {

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar Scalar::random(EntropySource& rng) {
  std::array<uint8_t, 32> buf;
  for (;;) {
    rng.fill(buf);
    buf[0] &= 0x3f;  // top two bits clear: r < 2^254, keeps rejection rate low
    if (auto v = bn::Fr::from_bytes_be(buf)) return Scalar(*v);
  }
}

Scalar Scalar::random_nonzero(EntropySource& rng) {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

// ---------------------------------------------------------------------------
// GtElement
// ---------------------------------------------------------------------------

namespace {

void fq_write(std::span<uint8_t, 32> out, const bn::Fq& v) { v.to_bytes_be(out); }

void fq2_write(std::span<uint8_t, 64> out, const bn::Fq2& v) {
  fq_write(out.subspan<0, 32>(), v.c0);
  fq_write(out.subspan<32, 32>(), v.c1);
}

void fq6_write(std::span<uint8_t, 192> out, const bn::Fq6& v) {
  fq2_write(out.subspan<0, 64>(), v.c0);
  fq2_write(out.subspan<64, 64>(), v.c1);
  fq2_write(out.subspan<128, 64>(), v.c2);
}

std::optional<bn::Fq2> fq2_read(std::span<const uint8_t, 64> in) {
  auto a = bn::Fq::from_bytes_be(in.subspan<0, 32>());
  auto b = bn::Fq::from_bytes_be(in.subspan<32, 32>());
  if (!a || !b) return std::nullopt;
  return bn::Fq2{*a, *b};
}

std::optional<bn::Fq6> fq6_read(std::span<const uint8_t, 192> in) {
  auto a = fq2_read(in.subspan<0, 64>());
  auto b = fq2_read(in.subspan<64, 64>());
  auto c = fq2_read(in.subspan<128, 64>());
  if (!a || !b || !c) return std::nullopt;
  return bn::Fq6{*a, *b, *c};
}

}  // namespace

std::array<uint8_t, GtElement::kEncodedSize> GtElement::encode() const {
  std::array<uint8_t, kEncodedSize> out;
  std::span<uint8_t, kEncodedSize> s(out);
  fq6_write(s.subspan<0, 192>(), v_.c0);
  fq6_write(s.subspan<192, 192>(), v_.c1);
  return out;
}

std::optional<GtElement> GtElement::decode(std::span<const uint8_t, kEncodedSize> in) {
  auto c0 = fq6_read(in.subspan<0, 192>());
  auto c1 = fq6_read(in.subspan<192, 192>());
  if (!c0 || !c1) return std::nullopt;
  const bn::Fq12 v{*c0, *c1};
  if (v.is_zero()) return std::nullopt;
  if (!v.pow(bn::kModulusR).is_one()) return std::nullopt;
  return GtElement(v);
}

// ---------------------------------------------------------------------------
// GroupElement
// ---------------------------------------------------------------------------

const GroupElement& GroupElement::generator() {
  static const GroupElement g(bn::g1_generator(), bn::g2_generator());
  return g;
}

GroupElement GroupElement::generator_mul(const Scalar& k) {
  const auto l = k.raw().canonical();
  return GroupElement(bn::g1_mul_generator(l), bn::g2_mul_generator(l));
}

std::array<uint8_t, GroupElement::kEncodedSize> GroupElement::encode() const {
  std::array<uint8_t, kEncodedSize> out;
  std::span<uint8_t, kEncodedSize> s(out);
  bn::g1_encode(s.subspan<0, bn::kG1EncodedSize>(), g1_);
  bn::g2_encode(s.subspan<bn::kG1EncodedSize, bn::kG2EncodedSize>(), g2_);
  return out;
}

bool GroupElement::halves_consistent() const {
  if (g1_.is_identity() || g2_.is_identity()) return g1_.is_identity() && g2_.is_identity();
  // Same exponent in both halves iff e(A1, P2) == e(P1, A2).
  return bn::pairing(g1_, bn::g2_generator()) == bn::pairing(bn::g1_generator(), g2_);
}

std::optional<GroupElement> GroupElement::decode(std::span<const uint8_t, kEncodedSize> in) {
  auto p1 = bn::g1_decode(in.subspan<0, bn::kG1EncodedSize>());
  auto p2 = bn::g2_decode(in.subspan<bn::kG1EncodedSize, bn::kG2EncodedSize>());
  if (!p1 || !p2) return std::nullopt;
  GroupElement e(*p1, *p2);
  if (!e.halves_consistent()) return std::nullopt;
  return e;
}

GtElement pairing(const GroupElement& a, const GroupElement& b) {
  return GtElement(bn::pairing(a.g1(), b.g2()));
}

// ---------------------------------------------------------------------------
// Hash functions
// ---------------------------------------------------------------------------

namespace {

Bytes dst_for(std::string_view suite, std::string_view tag) {
  Bytes d = to_bytes(suite);
  append(d, as_bytes(tag));
  return d;
}

Scalar field_hash(BytesView input, BytesView dst) {
  const Bytes wide = detail::expand_message_xmd(input, dst, 48);
  Scalar s = Scalar::from_wide_bytes(std::span<const uint8_t, 48>(wide.data(), 48));
  if (s.is_zero()) s = Scalar::one();
  return s;
}

Bytes message_point_point(BytesView msg, const GroupElement& a, const GroupElement& b) {
  Bytes input;
  append_prefixed(input, msg);
  append(input, a.encode());
  append(input, b.encode());
  return input;
}

}  // namespace

GroupElement hash_to_group_h1(std::string_view suite, BytesView msg,
                              const GroupElement& a, const GroupElement& b) {
  return GroupElement::generator_mul(
      field_hash(message_point_point(msg, a, b), dst_for(suite, kDstH1)));
}

GroupElement hash_to_group_h2(std::string_view suite, BytesView identity) {
  return GroupElement::generator_mul(field_hash(identity, dst_for(suite, kDstH2)));
}

Scalar hash_to_scalar(std::string_view suite, BytesView msg,
                      const GroupElement& r_point, const GroupElement& pub) {
  return field_hash(message_point_point(msg, r_point, pub), dst_for(suite, kDstH));
}

}  // namespace psig
