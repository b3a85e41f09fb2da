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

#include "psig/signer.hpp"

namespace psig {

BindingParameters binding_parameters_from_factors(std::string_view identity,
                                                  std::string_view suite,
                                                  const BindingFactors& factors) {
  const GroupElement pub = hash_to_group_h2(suite, as_bytes(identity));
  const Scalar ab = factors.a * factors.b;
  BindingParameters bp;
  bp.identity = std::string(identity);
  bp.x = pub.mul(factors.a);
  bp.y = pub.mul(ab);
  bp.z = GroupElement::generator_mul(factors.b);
  bp.w = GroupElement::generator_mul(ab);
  return bp;
}

std::pair<BindingFactors, BindingParameters> make_binding_parameters(
    std::string_view identity, std::string_view suite, EntropySource& rng) {
  BindingFactors f{Scalar::random_nonzero(rng), Scalar::random_nonzero(rng)};
  BindingParameters bp = binding_parameters_from_factors(identity, suite, f);
  return {f, std::move(bp)};
}

bool validate_partial_key(const GroupElement& d, const BindingParameters& bp,
                          const SystemParams& params) {
  return pairing(d, params.generator) == pairing(bp.y, params.pkg_public_key);
}

SignerKey unblind(const GroupElement& d, const BindingFactors& factors,
                  std::string_view identity, std::string_view suite) {
  SignerKey key;
  key.identity = std::string(identity);
  key.public_key = hash_to_group_h2(suite, as_bytes(identity));
  key.private_key = d.mul(factors.a.inverse());  // S = a^-1 * D = s*b*Pub
  key.b = factors.b;
  return key;
}

bool check_directory_consistency(const SignerKey& key, const RegistrationRecord& record,
                                 const SystemParams& params) {
  return pairing(key.private_key, params.generator) == pairing(key.public_key, record.token);
}

}  // namespace psig
