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

#ifndef PSIG_BN_FP6_HPP
#define PSIG_BN_FP6_HPP

#include "psig/bn/fp2.hpp"

namespace psig::bn {

// Fq6 = Fq2[v]/(v^3 - xi), elements c0 + c1*v + c2*v^2.
struct Fq6 {
  Fq2 c0, c1, c2;

  Fq6() = default;
  Fq6(const Fq2& a, const Fq2& b, const Fq2& c) : c0(a), c1(b), c2(c) {}

  static Fq6 zero() { return {Fq2::zero(), Fq2::zero(), Fq2::zero()}; }
  static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fq6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
  bool operator!=(const Fq6& o) const { return !(*this == o); }

  Fq6 operator+(const Fq6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fq6 operator-(const Fq6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fq6 operator-() const { return {-c0, -c1, -c2}; }

  Fq6 operator*(const Fq6& o) const {
    // Toom/Karatsuba interpolation, algorithm 13 of eprint 2010/354
    const Fq2 t0 = c0 * o.c0;
    const Fq2 t1 = c1 * o.c1;
    const Fq2 t2 = c2 * o.c2;
    const Fq2 r0 = ((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_by_xi() + t0;
    const Fq2 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_by_xi();
    const Fq2 r2 = (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  Fq6& operator+=(const Fq6& o) { return *this = *this + o; }
  Fq6& operator-=(const Fq6& o) { return *this = *this - o; }
  Fq6& operator*=(const Fq6& o) { return *this = *this * o; }

  Fq6 square() const { return *this * *this; }

  Fq6 scale(const Fq2& s) const { return {c0 * s, c1 * s, c2 * s}; }

  // Multiply by v: (c0, c1, c2) -> (xi*c2, c0, c1).
  Fq6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fq6 inverse() const {
    // Algorithm 17 of eprint 2010/354
    const Fq2 a = c0.square() - (c1 * c2).mul_by_xi();
    const Fq2 b = c2.square().mul_by_xi() - (c0 * c1);
    const Fq2 c = c1.square() - (c0 * c2);
    const Fq2 f = ((c2 * b + c1 * c).mul_by_xi() + c0 * a).inverse();
    return {a * f, b * f, c * f};
  }

  // x -> x^q coefficient-wise with the v-slot correction constants.
  Fq6 frobenius() const {
    return {c0.frobenius(), c1.frobenius() * frob6_c1(), c2.frobenius() * frob6_c2()};
  }
};

}  // namespace psig::bn

#endif  // PSIG_BN_FP6_HPP
