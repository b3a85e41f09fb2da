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

#include "psig/bn/curve.hpp"

namespace psig::bn {

namespace {

constexpr uint8_t kTagIdentity = 0x00;
constexpr uint8_t kTagEvenY = 0x02;
constexpr uint8_t kTagOddY = 0x03;

const FixedBaseTable<Fq>& g1_table() {
  static const FixedBaseTable<Fq> t(g1_generator());
  return t;
}

const FixedBaseTable<Fq2>& g2_table() {
  static const FixedBaseTable<Fq2> t(g2_generator());
  return t;
}

}  // namespace

G1 g1_mul_generator(const Limbs& k) { return g1_table().mul(k); }
G2 g2_mul_generator(const Limbs& k) { return g2_table().mul(k); }

bool g1_in_group(const G1& p) {
  if (p.is_identity()) return true;
  const auto a = p.to_affine();
  return on_curve_affine(a.x, a.y, g1_b());  // cofactor 1
}

bool g2_in_group(const G2& p) {
  if (p.is_identity()) return true;
  const auto a = p.to_affine();
  if (!on_curve_affine(a.x, a.y, g2_b())) return false;
  return p.mul(kModulusR).is_identity();
}

void g1_encode(std::span<uint8_t, kG1EncodedSize> out, const G1& p) {
  if (p.is_identity()) {
    std::memset(out.data(), 0, out.size());
    return;
  }
  const auto a = p.to_affine();
  out[0] = a.y.is_odd() ? kTagOddY : kTagEvenY;
  a.x.to_bytes_be(out.subspan<1, 32>());
}

void g2_encode(std::span<uint8_t, kG2EncodedSize> out, const G2& p) {
  if (p.is_identity()) {
    std::memset(out.data(), 0, out.size());
    return;
  }
  const auto a = p.to_affine();
  out[0] = a.y.is_odd() ? kTagOddY : kTagEvenY;
  a.x.c0.to_bytes_be(out.subspan<1, 32>());
  a.x.c1.to_bytes_be(out.subspan<33, 32>());
}

std::optional<G1> g1_decode(std::span<const uint8_t, kG1EncodedSize> in) {
  if (in[0] == kTagIdentity) {
    for (size_t i = 1; i < in.size(); ++i)
      if (in[i] != 0) return std::nullopt;
    return G1::identity();
  }
  if (in[0] != kTagEvenY && in[0] != kTagOddY) return std::nullopt;
  const auto x = Fq::from_bytes_be(in.subspan<1, 32>());
  if (!x) return std::nullopt;
  const auto y = fq_sqrt(x->square() * *x + g1_b());
  if (!y) return std::nullopt;
  const bool want_odd = in[0] == kTagOddY;
  const Fq yy = (y->is_odd() == want_odd) ? *y : -*y;
  return G1::from_affine(*x, yy);
}

std::optional<G2> g2_decode(std::span<const uint8_t, kG2EncodedSize> in) {
  if (in[0] == kTagIdentity) {
    for (size_t i = 1; i < in.size(); ++i)
      if (in[i] != 0) return std::nullopt;
    return G2::identity();
  }
  if (in[0] != kTagEvenY && in[0] != kTagOddY) return std::nullopt;
  const auto x0 = Fq::from_bytes_be(in.subspan<1, 32>());
  const auto x1 = Fq::from_bytes_be(in.subspan<33, 32>());
  if (!x0 || !x1) return std::nullopt;
  const Fq2 x{*x0, *x1};
  const auto y = fq2_sqrt(x.square() * x + g2_b());
  if (!y) return std::nullopt;
  const bool want_odd = in[0] == kTagOddY;
  const Fq2 yy = (y->is_odd() == want_odd) ? *y : -*y;
  const G2 p = G2::from_affine(x, yy);
  if (!p.mul(kModulusR).is_identity()) return std::nullopt;
  return p;
}

}  // namespace psig::bn
