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
//
// The symmetric-pairing algebra the protocol is written in. The scheme
// expects a symmetric pairing e: G x G -> Gt over a single group G; modern
// pairing-friendly curves only offer the asymmetric form e: G1 x G2 -> Gt.
// A GroupElement here is therefore a mirrored pair (A1, A2) of images of
// the same exponent in both source groups of the BN254 engine, and
// pairing(A, B) evaluates e(A1, B2). Every construction path (generator
// multiples and hash-derived elements) keeps the two halves consistent, and
// decode() rejects pairs whose halves disagree, so the symmetric identities
// e(A, B) = e(B, A) hold for every element the protocol can produce.

#ifndef PSIG_PAIRING_CORE_HPP
#define PSIG_PAIRING_CORE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "psig/bn/curve.hpp"
#include "psig/bn/fp12.hpp"
#include "psig/bytes.hpp"
#include "psig/errors.hpp"
#include "psig/rng.hpp"

namespace psig {

// The one supported suite: BN254 groups with SHA-256 based hashing.
inline constexpr std::string_view kSuiteId = "psig-bn254-sha256-v1/";

inline constexpr std::string_view kDstH1 = "PSIG-H1";
inline constexpr std::string_view kDstH2 = "PSIG-H2";
inline constexpr std::string_view kDstH = "PSIG-h";

class Scalar {
 public:
  static constexpr size_t kEncodedSize = 32;

  Scalar() = default;  // zero

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(bn::Fr::one()); }
  static Scalar from_u64(uint64_t v) { return Scalar(bn::Fr::from_u64(v)); }

  // Uniform in [0, r); rejection sampled.
  static Scalar random(EntropySource& rng);
  // Uniform in [1, r-1].
  static Scalar random_nonzero(EntropySource& rng);
  // 48-byte wide reduction; never fails.
  static Scalar from_wide_bytes(std::span<const uint8_t, 48> in) {
    return Scalar(bn::Fr::from_wide_bytes_be(in));
  }

  std::array<uint8_t, kEncodedSize> encode() const {
    std::array<uint8_t, kEncodedSize> out;
    v_.to_bytes_be(out);
    return out;
  }
  static std::optional<Scalar> decode(std::span<const uint8_t, kEncodedSize> in) {
    auto v = bn::Fr::from_bytes_be(in);
    if (!v) return std::nullopt;
    return Scalar(*v);
  }

  bool is_zero() const { return v_.is_zero(); }
  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }

  Scalar operator+(const Scalar& o) const { return Scalar(v_ + o.v_); }
  Scalar operator-(const Scalar& o) const { return Scalar(v_ - o.v_); }
  Scalar operator*(const Scalar& o) const { return Scalar(v_ * o.v_); }
  Scalar operator-() const { return Scalar(-v_); }

  // Throws InverseOfZeroError on zero input.
  Scalar inverse() const {
    if (is_zero()) throw InverseOfZeroError();
    return Scalar(v_.inverse());
  }

  const bn::Fr& raw() const { return v_; }
  explicit Scalar(const bn::Fr& v) : v_(v) {}

 private:
  bn::Fr v_;
};

class GtElement {
 public:
  static constexpr size_t kEncodedSize = 384;

  GtElement() : v_(bn::Fq12::one()) {}
  explicit GtElement(const bn::Fq12& v) : v_(v) {}

  static GtElement identity() { return GtElement(); }

  bool is_identity() const { return v_.is_one(); }
  bool operator==(const GtElement& o) const { return v_ == o.v_; }
  bool operator!=(const GtElement& o) const { return v_ != o.v_; }

  GtElement operator*(const GtElement& o) const { return GtElement(v_ * o.v_); }
  GtElement inverse() const { return GtElement(v_.conjugate()); }

  GtElement pow(const Scalar& e) const { return GtElement(v_.pow(e.raw().canonical())); }
  GtElement pow_u64(uint64_t e) const { return GtElement(v_.pow_u64(e)); }

  std::array<uint8_t, kEncodedSize> encode() const;
  // Rejects non-canonical coefficients and values outside the order-r
  // subgroup the pairing lands in.
  static std::optional<GtElement> decode(std::span<const uint8_t, kEncodedSize> in);

  const bn::Fq12& raw() const { return v_; }

 private:
  bn::Fq12 v_;
};

class GroupElement {
 public:
  // g1 part (33) followed by g2 part (65), both compressed.
  static constexpr size_t kEncodedSize = bn::kG1EncodedSize + bn::kG2EncodedSize;

  GroupElement() : g1_(bn::G1::identity()), g2_(bn::G2::identity()) {}

  static GroupElement identity() { return {}; }
  static const GroupElement& generator();

  // Fixed-base multiple of the generator pair.
  static GroupElement generator_mul(const Scalar& k);

  GroupElement add(const GroupElement& o) const {
    return GroupElement(g1_.add(o.g1_), g2_.add(o.g2_));
  }
  GroupElement operator+(const GroupElement& o) const { return add(o); }
  GroupElement operator-(const GroupElement& o) const {
    return GroupElement(g1_.add(o.g1_.negate()), g2_.add(o.g2_.negate()));
  }
  GroupElement negate() const { return GroupElement(g1_.negate(), g2_.negate()); }

  GroupElement mul(const Scalar& k) const {
    const auto l = k.raw().canonical();
    return GroupElement(g1_.mul(l), g2_.mul(l));
  }

  bool is_identity() const { return g1_.is_identity(); }
  bool operator==(const GroupElement& o) const { return g1_.eq(o.g1_) && g2_.eq(o.g2_); }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

  std::array<uint8_t, kEncodedSize> encode() const;

  // Full validation: canonical bytes, curve membership, order-r subgroup,
  // and agreement of the two mirrored halves (checked with the pairing).
  static std::optional<GroupElement> decode(std::span<const uint8_t, kEncodedSize> in);

  // The mirrored-halves consistency predicate on an already-decoded element.
  bool halves_consistent() const;

  const bn::G1& g1() const { return g1_; }
  const bn::G2& g2() const { return g2_; }
  GroupElement(const bn::G1& a, const bn::G2& b) : g1_(a), g2_(b) {}

 private:
  bn::G1 g1_;
  bn::G2 g2_;
};

// The bilinear map: e(A.g1, B.g2). Symmetric for consistent elements.
GtElement pairing(const GroupElement& a, const GroupElement& b);

// H1 : {0,1}* x G x G -> G
GroupElement hash_to_group_h1(std::string_view suite, BytesView msg,
                              const GroupElement& a, const GroupElement& b);
// H2 : {0,1}* -> G (signer public keys)
GroupElement hash_to_group_h2(std::string_view suite, BytesView identity);
// h : {0,1}* x G x G -> Zq*  (zero digests remap to 1)
Scalar hash_to_scalar(std::string_view suite, BytesView msg,
                      const GroupElement& r_point, const GroupElement& pub);

struct SystemParams {
  std::string suite_id;
  GroupElement generator;
  GroupElement pkg_public_key;

  // Big-endian group order q (the scalar field modulus).
  static std::array<uint8_t, 32> group_order_be();

  Bytes encode() const;
  static std::optional<SystemParams> decode(BytesView in);

  // Structural checks: known suite, canonical generator, and a public key
  // in the group and distinct from the identity.
  bool validate() const;
};

}  // namespace psig

#endif  // PSIG_PAIRING_CORE_HPP
