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

#ifndef PSIG_BN_CURVE_HPP
#define PSIG_BN_CURVE_HPP

#include <optional>
#include <vector>

#include "psig/bn/fp2.hpp"

namespace psig::bn {

// Short Weierstrass point y^2 = x^3 + b in Jacobian coordinates (Z = 0 is
// the point at infinity). Both BN254 groups have a = 0.
template <class F>
struct Point {
  F X, Y, Z;

  static Point identity() { return {F::one(), F::one(), F::zero()}; }

  static Point from_affine(const F& x, const F& y) { return {x, y, F::one()}; }

  bool is_identity() const { return Z.is_zero(); }

  Point negate() const { return {X, -Y, Z}; }

  // dbl-2009-l
  Point dbl() const {
    if (is_identity()) return *this;
    const F A = X.square();
    const F B = Y.square();
    const F C = B.square();
    F D = (X + B).square() - A - C;
    D = D.dbl();
    const F E = A.dbl() + A;
    const F Fv = E.square();
    const F X3 = Fv - D.dbl();
    const F Y3 = E * (D - X3) - C.dbl().dbl().dbl();
    const F Z3 = (Y * Z).dbl();
    return {X3, Y3, Z3};
  }

  // add-2007-bl
  Point add(const Point& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    const F Z1Z1 = Z.square();
    const F Z2Z2 = o.Z.square();
    const F U1 = X * Z2Z2;
    const F U2 = o.X * Z1Z1;
    const F S1 = Y * o.Z * Z2Z2;
    const F S2 = o.Y * Z * Z1Z1;
    const F H = U2 - U1;
    F Rr = S2 - S1;
    if (H.is_zero()) {
      if (Rr.is_zero()) return dbl();
      return identity();
    }
    Rr = Rr.dbl();
    const F I = H.square().dbl().dbl();
    const F J = H * I;
    const F V = U1 * I;
    const F X3 = Rr.square() - J - V.dbl();
    const F Y3 = Rr * (V - X3) - (S1 * J).dbl();
    const F Z3 = ((Z + o.Z).square() - Z1Z1 - Z2Z2) * H;
    return {X3, Y3, Z3};
  }

  Point sub(const Point& o) const { return add(o.negate()); }

  Point mul(const Limbs& k) const {
    Point acc = identity();
    bool started = false;
    for (int i = 3; i >= 0; --i) {
      for (int b = 63; b >= 0; --b) {
        if (started) acc = acc.dbl();
        if ((k[i] >> b) & 1) {
          if (started)
            acc = acc.add(*this);
          else {
            acc = *this;
            started = true;
          }
        }
      }
    }
    return started ? acc : identity();
  }

  bool eq(const Point& o) const {
    if (is_identity() || o.is_identity()) return is_identity() && o.is_identity();
    // cross-multiplied Jacobian comparison
    const F Z1Z1 = Z.square();
    const F Z2Z2 = o.Z.square();
    if (X * Z2Z2 != o.X * Z1Z1) return false;
    return Y * o.Z * Z2Z2 == o.Y * Z * Z1Z1;
  }

  struct Affine {
    F x, y;
    bool infinity = false;
  };

  Affine to_affine() const {
    if (is_identity()) return {F::zero(), F::zero(), true};
    const F zinv = Z.inverse();
    const F zinv2 = zinv.square();
    return {X * zinv2, Y * zinv2 * zinv, false};
  }
};

using G1 = Point<Fq>;
using G2 = Point<Fq2>;

inline const Fq& g1_b() {
  static const Fq b = Fq::from_u64(3);
  return b;
}
// G2 lives on the D-twist y^2 = x^3 + 3/xi.
inline const Fq2& g2_b() { return twist_b(); }

inline G1 g1_generator() {
  return G1::from_affine(Fq::from_u64(1), Fq::from_u64(2));
}

inline G2 g2_generator() {
  return G2::from_affine(
      detail::fq2_from(detail::kG2GenX_c0, detail::kG2GenX_c1),
      detail::fq2_from(detail::kG2GenY_c0, detail::kG2GenY_c1));
}

template <class F>
inline bool on_curve_affine(const F& x, const F& y, const F& b) {
  return y.square() == x.square() * x + b;
}

// Fixed-base multiplication for the two generators: 4-bit windows over the
// 256-bit scalar, 64 precomputed tables of 15 points each.
template <class F>
class FixedBaseTable {
 public:
  explicit FixedBaseTable(const Point<F>& base) {
    table_.resize(64 * 15, Point<F>::identity());
    Point<F> win = base;
    for (int w = 0; w < 64; ++w) {
      Point<F> acc = Point<F>::identity();
      for (int k = 1; k <= 15; ++k) {
        acc = acc.add(win);
        table_[w * 15 + (k - 1)] = acc;
      }
      win = acc.add(win);  // acc holds 15*win, so this is 16*win
    }
  }

  Point<F> mul(const Limbs& k) const {
    Point<F> acc = Point<F>::identity();
    for (int w = 0; w < 64; ++w) {
      const unsigned nib = (k[w / 16] >> (4 * (w % 16))) & 0xf;
      if (nib) acc = acc.add(table_[w * 15 + (nib - 1)]);
    }
    return acc;
  }

 private:
  std::vector<Point<F>> table_;
};

G1 g1_mul_generator(const Limbs& k);
G2 g2_mul_generator(const Limbs& k);

// Subgroup checks. G1 has cofactor 1; the twist needs a full order check.
bool g1_in_group(const G1& p);
bool g2_in_group(const G2& p);

// Compressed encodings: tag byte (0x00 identity, 0x02 even y, 0x03 odd y)
// followed by the big-endian x coordinate (c0 then c1 for Fq2).
constexpr size_t kG1EncodedSize = 33;
constexpr size_t kG2EncodedSize = 65;

void g1_encode(std::span<uint8_t, kG1EncodedSize> out, const G1& p);
void g2_encode(std::span<uint8_t, kG2EncodedSize> out, const G2& p);
std::optional<G1> g1_decode(std::span<const uint8_t, kG1EncodedSize> in);
std::optional<G2> g2_decode(std::span<const uint8_t, kG2EncodedSize> in);

}  // namespace psig::bn

#endif  // PSIG_BN_CURVE_HPP
