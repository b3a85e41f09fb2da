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

#ifndef PSIG_BN_PAIRING_HPP
#define PSIG_BN_PAIRING_HPP

#include "psig/bn/curve.hpp"
#include "psig/bn/fp12.hpp"

namespace psig::bn {

// Optimal ate pairing e(P, Q) for P in G1, Q in G2 (twist coordinates).
// Identity inputs map to the Fq12 one.
Fq12 pairing(const G1& p, const G2& q);

Fq12 miller_loop(const G1& p, const G2& q);
Fq12 final_exponentiation(const Fq12& f);

}  // namespace psig::bn

#endif  // PSIG_BN_PAIRING_HPP
