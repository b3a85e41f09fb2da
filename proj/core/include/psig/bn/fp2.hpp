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

#ifndef PSIG_BN_FP2_HPP
#define PSIG_BN_FP2_HPP

#include <optional>

#include "psig/bn/fp.hpp"

namespace psig::bn {

// Fq2 = Fq[i]/(i^2 + 1), elements c0 + c1*i.
struct Fq2 {
  Fq c0, c1;

  Fq2() = default;
  Fq2(const Fq& a, const Fq& b) : c0(a), c1(b) {}

  static Fq2 zero() { return {Fq::zero(), Fq::zero()}; }
  static Fq2 one() { return {Fq::one(), Fq::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fq2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fq2& o) const { return !(*this == o); }

  Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fq2 operator-() const { return {-c0, -c1}; }

  Fq2 operator*(const Fq2& o) const {
    // Karatsuba with i^2 = -1
    const Fq aa = c0 * o.c0;
    const Fq bb = c1 * o.c1;
    const Fq cross = (c0 + c1) * (o.c0 + o.c1);
    return {aa - bb, cross - aa - bb};
  }

  Fq2& operator+=(const Fq2& o) { return *this = *this + o; }
  Fq2& operator-=(const Fq2& o) { return *this = *this - o; }
  Fq2& operator*=(const Fq2& o) { return *this = *this * o; }

  Fq2 scale(const Fq& s) const { return {c0 * s, c1 * s}; }

  Fq2 square() const {
    // (c0 + c1 i)^2 = (c0+c1)(c0-c1) + 2 c0 c1 i
    const Fq t = c0 * c1;
    return {(c0 + c1) * (c0 - c1), t.dbl()};
  }

  Fq2 dbl() const { return {c0.dbl(), c1.dbl()}; }

  Fq2 conjugate() const { return {c0, -c1}; }

  // Frobenius endomorphism x -> x^q is conjugation for this tower.
  Fq2 frobenius() const { return conjugate(); }

  // Multiplication by the sextic non-residue xi = 9 + i.
  Fq2 mul_by_xi() const {
    return {c0.mul_small(9) - c1, c1.mul_small(9) + c0};
  }

  Fq norm() const { return c0.square() + c1.square(); }

  Fq2 inverse() const {
    const Fq inv = norm().inverse();
    return {c0 * inv, -(c1 * inv)};
  }

  Fq2 pow(const Limbs& e) const {
    Fq2 acc = one();
    bool started = false;
    for (int i = 3; i >= 0; --i) {
      for (int b = 63; b >= 0; --b) {
        if (started) acc = acc.square();
        if ((e[i] >> b) & 1) {
          if (started)
            acc *= *this;
          else {
            acc = *this;
            started = true;
          }
        }
      }
    }
    return started ? acc : one();
  }

  // Sign convention for point compression: parity of c0 unless c0 = 0,
  // then parity of c1. Exactly one of {y, -y} is "odd" for y != 0.
  bool is_odd() const { return c0.is_zero() ? c1.is_odd() : c0.is_odd(); }
};

inline int fq2_legendre(const Fq2& x) {
  // x is a square in Fq2 iff its norm is a square in Fq.
  return fq_legendre(x.norm());
}

// Square root in Fq2 via the complex method (q = 3 mod 4).
inline std::optional<Fq2> fq2_sqrt(const Fq2& z) {
  if (z.is_zero()) return Fq2::zero();
  if (z.c1.is_zero()) {
    if (auto s = fq_sqrt(z.c0)) return Fq2{*s, Fq::zero()};
    auto s = fq_sqrt(-z.c0);
    if (!s) return std::nullopt;
    return Fq2{Fq::zero(), *s};  // (si)^2 = -s^2 = c0
  }
  const Fq n = z.norm();
  const auto s = fq_sqrt(n);
  if (!s) return std::nullopt;
  Fq t = (z.c0 + *s).half();
  if (fq_legendre(t) != 1) t = (z.c0 - *s).half();
  const auto c = fq_sqrt(t);
  if (!c) return std::nullopt;
  const Fq d = z.c1 * c->dbl().inverse();
  Fq2 w{*c, d};
  if (w.square() != z) return std::nullopt;
  return w;
}

// ---------------------------------------------------------------------------
// Precomputed Fq2 constants (canonical limb form; converted once at startup).
// ---------------------------------------------------------------------------

namespace detail {
inline constexpr Limbs kFrob6C1_c0{{0x99e39557176f553dull, 0xb78cc310c2c3330cull, 0x4c0bec3cf559b143ull, 0x2fb347984f7911f7ull}};
inline constexpr Limbs kFrob6C1_c1{{0x1665d51c640fcba2ull, 0x32ae2a1d0b7c9dceull, 0x4ba4cc8bd75a0794ull, 0x16c9e55061ebae20ull}};
inline constexpr Limbs kFrob6C2_c0{{0x848a1f55921ea762ull, 0xd33365f7be94ec72ull, 0x80f3c0b75a181e84ull, 0x05b54f5e64eea801ull}};
inline constexpr Limbs kFrob6C2_c1{{0xc13b4711cd2b8126ull, 0x3685d2ea1bdec763ull, 0x9f3a80b03b0b1c92ull, 0x2c145edbe7fd8aeeull}};
inline constexpr Limbs kFrob12C1_c0{{0xd60b35dadcc9e470ull, 0x5c521e08292f2176ull, 0xe8b99fdd76e68b60ull, 0x1284b71c2865a7dfull}};
inline constexpr Limbs kFrob12C1_c1{{0xca5cf05f80f362acull, 0x747992778eeec7e5ull, 0xa6327cfe12150b8eull, 0x246996f3b4fae7e6ull}};
inline constexpr Limbs kTwistFrobY_c0{{0xdc54014671a0135aull, 0xdbaae0eda9c95998ull, 0xdc5ec698b6e2f9b9ull, 0x063cf305489af5dcull}};
inline constexpr Limbs kTwistFrobY_c1{{0x82d37f632623b0e3ull, 0x21807dc98fa25bd2ull, 0x0704b5a7ec796f2bull, 0x07c03cbcac41049aull}};
inline constexpr Limbs kTwistB_c0{{0x3267e6dc24a138e5ull, 0xb5b4c5e559dbefa3ull, 0x81be18991be06ac3ull, 0x2b149d40ceb8aaaeull}};
inline constexpr Limbs kTwistB_c1{{0xe4a2bd0685c315d2ull, 0xa74fa084e52d1852ull, 0xcd2cafadeed8fdf4ull, 0x009713b03af0fed4ull}};
inline constexpr Limbs kG2GenX_c0{{0x46debd5cd992f6edull, 0x674322d4f75edaddull, 0x426a00665e5c4479ull, 0x1800deef121f1e76ull}};
inline constexpr Limbs kG2GenX_c1{{0x97e485b7aef312c2ull, 0xf1aa493335a9e712ull, 0x7260bfb731fb5d25ull, 0x198e9393920d483aull}};
inline constexpr Limbs kG2GenY_c0{{0x4ce6cc0166fa7daaull, 0xe3d1e7690c43d37bull, 0x4aab71808dcb408full, 0x12c85ea5db8c6debull}};
inline constexpr Limbs kG2GenY_c1{{0x55acdadcd122975bull, 0xbc4b313370b38ef3ull, 0xec9e99ad690c3395ull, 0x090689d0585ff075ull}};

inline Fq2 fq2_from(const Limbs& a, const Limbs& b) {
  return {Fq::from_canonical(a), Fq::from_canonical(b)};
}
}  // namespace detail

// xi^((q-1)/3): Frobenius coefficient for the v slot of Fq6 and the G2
// untwist-Frobenius-twist x coordinate.
inline const Fq2& frob6_c1() {
  static const Fq2 v = detail::fq2_from(detail::kFrob6C1_c0, detail::kFrob6C1_c1);
  return v;
}
// xi^(2(q-1)/3)
inline const Fq2& frob6_c2() {
  static const Fq2 v = detail::fq2_from(detail::kFrob6C2_c0, detail::kFrob6C2_c1);
  return v;
}
// xi^((q-1)/6)
inline const Fq2& frob12_c1() {
  static const Fq2 v = detail::fq2_from(detail::kFrob12C1_c0, detail::kFrob12C1_c1);
  return v;
}
// xi^((q-1)/2): G2 untwist-Frobenius-twist y coordinate.
inline const Fq2& twist_frob_y() {
  static const Fq2 v = detail::fq2_from(detail::kTwistFrobY_c0, detail::kTwistFrobY_c1);
  return v;
}
// b' = 3/xi, the twist curve constant.
inline const Fq2& twist_b() {
  static const Fq2 v = detail::fq2_from(detail::kTwistB_c0, detail::kTwistB_c1);
  return v;
}

}  // namespace psig::bn

#endif  // PSIG_BN_FP2_HPP
