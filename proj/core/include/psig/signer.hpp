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
// Client-side key lifecycle: binding factors, blinded request, partial-key
// validation, and unblinding into the private key.

#ifndef PSIG_SIGNER_HPP
#define PSIG_SIGNER_HPP

#include "psig/pkg.hpp"

namespace psig {

// The two secret blinding exponents. Never transmitted; `a` is discarded
// after unblinding, `b` is retained inside SignerKey.
struct BindingFactors {
  Scalar a, b;
};

struct SignerKey {
  std::string identity;
  GroupElement public_key;   // Pub = H2(identity)
  GroupElement private_key;  // S = s * b * Pub
  // The retained blinding exponent: psi = b*P shows up in delegation,
  // signing and revocation, so the protocol is unusable without it.
  Scalar b;
};

// Samples fresh (a, b) and builds (X, Y, Z, W) for the identity.
std::pair<BindingFactors, BindingParameters> make_binding_parameters(
    std::string_view identity, std::string_view suite, EntropySource& rng);

// Deterministic variant used by tests and by make_binding_parameters.
BindingParameters binding_parameters_from_factors(std::string_view identity,
                                                  std::string_view suite,
                                                  const BindingFactors& factors);

// The signer-side issuance check: e(D, P) == e(Y, Pub_PKG).
bool validate_partial_key(const GroupElement& d, const BindingParameters& bp,
                          const SystemParams& params);

// S = a^-1 * D. Call only after validate_partial_key succeeded.
SignerKey unblind(const GroupElement& d, const BindingFactors& factors,
                  std::string_view identity, std::string_view suite);

// Directory consistency: e(S, P) == e(Pub, Reg).
bool check_directory_consistency(const SignerKey& key, const RegistrationRecord& record,
                                 const SystemParams& params);

}  // namespace psig

#endif  // PSIG_SIGNER_HPP
