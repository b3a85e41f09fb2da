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

#ifndef PSIG_BN_FP_HPP
#define PSIG_BN_FP_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>

namespace psig::bn {

using Limbs = std::array<uint64_t, 4>;  // little-endian 64-bit limbs

// ---------------------------------------------------------------------------
// BN254 (alt_bn128) parameters.
//
//   q = 21888242871839275222246405745257275088696311157297823662689037894645226208583
//   r = 21888242871839275222246405745257275088548364400416034343698204186575808495617
//   u = 4965661367192848881, ate loop count 6u+2, curve y^2 = x^3 + 3,
//   twist y^2 = x^3 + 3/xi over Fq2 with xi = 9 + i.
// ---------------------------------------------------------------------------

inline constexpr Limbs kModulusQ{{0x3c208c16d87cfd47ull, 0x97816a916871ca8dull, 0xb85045b68181585dull, 0x30644e72e131a029ull}};
inline constexpr Limbs kModulusR{{0x43e1f593f0000001ull, 0x2833e84879b97091ull, 0xb85045b68181585dull, 0x30644e72e131a029ull}};
inline constexpr uint64_t kInvQ = 0x87d20782e4866389ull;  // -q^-1 mod 2^64
inline constexpr uint64_t kInvR = 0xc2e1f593efffffffull;  // -r^-1 mod 2^64
inline constexpr Limbs kR1Q{{0xd35d438dc58f0d9dull, 0x0a78eb28f5c70b3dull, 0x666ea36f7879462cull, 0x0e0a77c19a07df2full}};
inline constexpr Limbs kR2Q{{0xf32cfc5b538afa89ull, 0xb5e71911d44501fbull, 0x47ab1eff0a417ff6ull, 0x06d89f71cab8351full}};
inline constexpr Limbs kR1R{{0xac96341c4ffffffbull, 0x36fc76959f60cd29ull, 0x666ea36f7879462eull, 0x0e0a77c19a07df2full}};
inline constexpr Limbs kR2R{{0x1bb8e645ae216da7ull, 0x53fe3ab1e35c59e3ull, 0x8c49833d53bb8085ull, 0x0216d0b17f4e44a5ull}};
inline constexpr Limbs kQPlus1Over4{{0x4f082305b61f3f52ull, 0x65e05aa45a1c72a3ull, 0x6e14116da0605617ull, 0x0c19139cb84c680aull}};
inline constexpr Limbs kQMinus1Over2{{0x9e10460b6c3e7ea3ull, 0xcbc0b548b438e546ull, 0xdc2822db40c0ac2eull, 0x183227397098d014ull}};
inline constexpr uint64_t kU = 4965661367192848881ull;
// bits of 6u+2 = 29793968203157093288, most significant first
inline constexpr char kAteLoopBits[] = "11001110101111001011100000011100110111110011101100011101110101000";

// ---------------------------------------------------------------------------
// Raw limb helpers.
// ---------------------------------------------------------------------------

inline uint64_t limbs_add(Limbs& a, const Limbs& b) {
  unsigned __int128 acc = 0;
  for (int i = 0; i < 4; ++i) {
    acc += (unsigned __int128)a[i] + b[i];
    a[i] = (uint64_t)acc;
    acc >>= 64;
  }
  return (uint64_t)acc;
}

inline uint64_t limbs_sub(Limbs& a, const Limbs& b) {
  unsigned __int128 borrow = 0;
  for (int i = 0; i < 4; ++i) {
    unsigned __int128 d = (unsigned __int128)a[i] - b[i] - borrow;
    a[i] = (uint64_t)d;
    borrow = (d >> 64) ? 1 : 0;
  }
  return (uint64_t)borrow;
}

inline int limbs_cmp(const Limbs& a, const Limbs& b) {
  for (int i = 3; i >= 0; --i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

inline bool limbs_is_zero(const Limbs& a) {
  return (a[0] | a[1] | a[2] | a[3]) == 0;
}

inline void limbs_from_bytes_be(Limbs& out, std::span<const uint8_t, 32> in) {
  for (int i = 0; i < 4; ++i) {
    uint64_t w = 0;
    for (int j = 0; j < 8; ++j) w = (w << 8) | in[(3 - i) * 8 + j];
    out[i] = w;
  }
}

inline void limbs_to_bytes_be(std::span<uint8_t, 32> out, const Limbs& in) {
  for (int i = 0; i < 4; ++i) {
    uint64_t w = in[i];
    for (int j = 7; j >= 0; --j) {
      out[(3 - i) * 8 + j] = (uint8_t)w;
      w >>= 8;
    }
  }
}

// CIOS Montgomery multiplication: out = a * b * 2^-256 mod m.
inline void mont_mul(Limbs& out, const Limbs& a, const Limbs& b, const Limbs& m, uint64_t n0) {
  uint64_t t[6] = {0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    uint64_t carry = 0;
    for (int j = 0; j < 4; ++j) {
      unsigned __int128 cur = (unsigned __int128)a[i] * b[j] + t[j] + carry;
      t[j] = (uint64_t)cur;
      carry = (uint64_t)(cur >> 64);
    }
    unsigned __int128 s = (unsigned __int128)t[4] + carry;
    t[4] = (uint64_t)s;
    t[5] = (uint64_t)(s >> 64);

    const uint64_t mf = t[0] * n0;
    unsigned __int128 cur = (unsigned __int128)mf * m[0] + t[0];
    carry = (uint64_t)(cur >> 64);
    for (int j = 1; j < 4; ++j) {
      cur = (unsigned __int128)mf * m[j] + t[j] + carry;
      t[j - 1] = (uint64_t)cur;
      carry = (uint64_t)(cur >> 64);
    }
    s = (unsigned __int128)t[4] + carry;
    t[3] = (uint64_t)s;
    t[4] = t[5] + (uint64_t)(s >> 64);
  }
  Limbs res{{t[0], t[1], t[2], t[3]}};
  if (t[4] != 0 || limbs_cmp(res, m) >= 0) limbs_sub(res, m);
  out = res;
}

// ---------------------------------------------------------------------------
// Prime field element in Montgomery form. Tag supplies the parameters.
// ---------------------------------------------------------------------------

struct FqParams {
  static constexpr const Limbs& modulus() { return kModulusQ; }
  static constexpr uint64_t n0() { return kInvQ; }
  static constexpr const Limbs& r1() { return kR1Q; }
  static constexpr const Limbs& r2() { return kR2Q; }
};

struct FrParams {
  static constexpr const Limbs& modulus() { return kModulusR; }
  static constexpr uint64_t n0() { return kInvR; }
  static constexpr const Limbs& r1() { return kR1R; }
  static constexpr const Limbs& r2() { return kR2R; }
};

template <class P>
class Fp {
 public:
  Fp() : v_{{0, 0, 0, 0}} {}

  static Fp zero() { return Fp(); }
  static Fp one() { return from_mont(P::r1()); }

  static Fp from_u64(uint64_t x) {
    Fp r;
    r.v_ = Limbs{{x, 0, 0, 0}};
    r.to_mont();
    return r;
  }

  // Canonical limbs (must already be < modulus).
  static Fp from_canonical(const Limbs& l) {
    Fp r;
    r.v_ = l;
    r.to_mont();
    return r;
  }

  // Arbitrary 256-bit value, reduced mod m.
  static Fp from_limbs_reduce(Limbs l) {
    while (limbs_cmp(l, P::modulus()) >= 0) limbs_sub(l, P::modulus());
    return from_canonical(l);
  }

  static std::optional<Fp> from_bytes_be(std::span<const uint8_t, 32> in) {
    Limbs l;
    limbs_from_bytes_be(l, in);
    if (limbs_cmp(l, P::modulus()) >= 0) return std::nullopt;
    return from_canonical(l);
  }

  // 48-byte big-endian value reduced mod m (RFC 9380 style wide reduction).
  static Fp from_wide_bytes_be(std::span<const uint8_t, 48> in) {
    std::array<uint8_t, 32> lo_bytes{};
    std::memcpy(lo_bytes.data(), in.data() + 16, 32);
    std::array<uint8_t, 32> hi_bytes{};
    std::memcpy(hi_bytes.data() + 16, in.data(), 16);
    Limbs lo, hi;
    limbs_from_bytes_be(lo, lo_bytes);
    limbs_from_bytes_be(hi, hi_bytes);
    // value = hi * 2^256 + lo
    return from_limbs_reduce(hi) * shift256() + from_limbs_reduce(lo);
  }

  void to_bytes_be(std::span<uint8_t, 32> out) const {
    limbs_to_bytes_be(out, canonical());
  }

  Limbs canonical() const {
    Limbs one_l{{1, 0, 0, 0}};
    Limbs r;
    mont_mul(r, v_, one_l, P::modulus(), P::n0());
    return r;
  }

  bool is_zero() const { return limbs_is_zero(v_); }
  bool is_odd() const { return canonical()[0] & 1; }

  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  Fp operator+(const Fp& o) const {
    Fp r = *this;
    uint64_t carry = limbs_add(r.v_, o.v_);
    if (carry || limbs_cmp(r.v_, P::modulus()) >= 0) limbs_sub(r.v_, P::modulus());
    return r;
  }

  Fp operator-(const Fp& o) const {
    Fp r = *this;
    if (limbs_sub(r.v_, o.v_)) limbs_add(r.v_, P::modulus());
    return r;
  }

  Fp operator-() const { return zero() - *this; }

  Fp operator*(const Fp& o) const {
    Fp r;
    mont_mul(r.v_, v_, o.v_, P::modulus(), P::n0());
    return r;
  }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp square() const { return *this * *this; }

  Fp dbl() const { return *this + *this; }

  Fp mul_small(uint64_t k) const {
    Fp acc = zero();
    Fp base = *this;
    while (k) {
      if (k & 1) acc += base;
      base = base.dbl();
      k >>= 1;
    }
    return acc;
  }

  Fp half() const {
    static const Fp inv2 = from_u64(2).fermat_inverse();
    return *this * inv2;
  }

  Fp pow(const Limbs& e) const {
    Fp acc = one();
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

  // Binary extended gcd inverse; zero input yields zero.
  Fp inverse() const {
    if (is_zero()) return zero();
    Limbs u = canonical();
    Limbs v = P::modulus();
    Limbs x1{{1, 0, 0, 0}};
    Limbs x2{{0, 0, 0, 0}};
    auto halve_mod = [](Limbs& x) {
      uint64_t carry = 0;
      if (x[0] & 1) carry = limbs_add(x, P::modulus());
      for (int i = 0; i < 3; ++i) x[i] = (x[i] >> 1) | (x[i + 1] << 63);
      x[3] = (x[3] >> 1) | (carry << 63);
    };
    auto sub_mod = [](Limbs& a, const Limbs& b) {
      if (limbs_sub(a, b)) limbs_add(a, P::modulus());
    };
    Limbs one_l{{1, 0, 0, 0}};
    while (limbs_cmp(u, one_l) != 0 && limbs_cmp(v, one_l) != 0) {
      while ((u[0] & 1) == 0) {
        for (int i = 0; i < 3; ++i) u[i] = (u[i] >> 1) | (u[i + 1] << 63);
        u[3] >>= 1;
        halve_mod(x1);
      }
      while ((v[0] & 1) == 0) {
        for (int i = 0; i < 3; ++i) v[i] = (v[i] >> 1) | (v[i + 1] << 63);
        v[3] >>= 1;
        halve_mod(x2);
      }
      if (limbs_cmp(u, v) >= 0) {
        limbs_sub(u, v);
        sub_mod(x1, x2);
      } else {
        limbs_sub(v, u);
        sub_mod(x2, x1);
      }
    }
    const Limbs& res = (limbs_cmp(u, one_l) == 0) ? x1 : x2;
    return from_canonical(res);
  }

  // Fermat route, kept as an independent cross-check of inverse().
  Fp fermat_inverse() const {
    Limbs e = P::modulus();
    Limbs two{{2, 0, 0, 0}};
    limbs_sub(e, two);
    return pow(e);
  }

  static Fp from_mont(const Limbs& l) {
    Fp r;
    r.v_ = l;
    return r;
  }
  const Limbs& mont_limbs() const { return v_; }

 private:
  void to_mont() { mont_mul(v_, v_, P::r2(), P::modulus(), P::n0()); }

  static const Fp& shift256() {
    static const Fp s = from_canonical(P::r1());  // 2^256 mod m
    return s;
  }

  Limbs v_;
};

using Fq = Fp<FqParams>;
using Fr = Fp<FrParams>;

// Legendre symbol: 1 if square, -1 if non-square, 0 if zero.
inline int fq_legendre(const Fq& x) {
  if (x.is_zero()) return 0;
  Fq l = x.pow(kQMinus1Over2);
  return l == Fq::one() ? 1 : -1;
}

// Square root in Fq (q = 3 mod 4). Returns nullopt for non-squares.
inline std::optional<Fq> fq_sqrt(const Fq& x) {
  if (x.is_zero()) return Fq::zero();
  Fq c = x.pow(kQPlus1Over4);
  if (c.square() != x) return std::nullopt;
  return c;
}

}  // namespace psig::bn

#endif  // PSIG_BN_FP_HPP
