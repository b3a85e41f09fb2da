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

#ifndef PSIG_BN_FP12_HPP
#define PSIG_BN_FP12_HPP

#include "psig/bn/fp6.hpp"

namespace psig::bn {

// Fq12 = Fq6[w]/(w^2 - v), elements c0 + c1*w.
struct Fq12 {
  Fq6 c0, c1;

  Fq12() = default;
  Fq12(const Fq6& a, const Fq6& b) : c0(a), c1(b) {}

  static Fq12 zero() { return {Fq6::zero(), Fq6::zero()}; }
  static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

  bool is_one() const { return c0 == Fq6::one() && c1.is_zero(); }
  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fq12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fq12& o) const { return !(*this == o); }

  Fq12 operator*(const Fq12& o) const {
    // Karatsuba over Fq6 with w^2 = v
    const Fq6 aa = c0 * o.c0;
    const Fq6 bb = c1 * o.c1;
    const Fq6 cross = (c0 + c1) * (o.c0 + o.c1);
    return {aa + bb.mul_by_v(), cross - aa - bb};
  }

  Fq12& operator*=(const Fq12& o) { return *this = *this * o; }

  Fq12 square() const {
    const Fq6 t = c0 * c1;
    const Fq6 a = (c0 + c1) * (c0 + c1.mul_by_v()) - t - t.mul_by_v();
    return {a, t + t};
  }

  // Conjugate over Fq6; equals x^(q^6), and the inverse on the cyclotomic
  // subgroup the pairing lands in.
  Fq12 conjugate() const { return {c0, -c1}; }

  Fq12 inverse() const {
    const Fq6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  Fq12 frobenius() const {
    return {c0.frobenius(), c1.frobenius().scale(frob12_c1())};
  }

  Fq12 frobenius2() const { return frobenius().frobenius(); }
  Fq12 frobenius3() const { return frobenius2().frobenius(); }

  Fq12 pow(const Limbs& e) const {
    Fq12 acc = one();
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

  Fq12 pow_u64(uint64_t e) const { return pow(Limbs{{e, 0, 0, 0}}); }
};

}  // namespace psig::bn

#endif  // PSIG_BN_FP12_HPP
