// Copyright 2026 The Authors.
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

#ifndef OSFORGE_INVARIANTS_HPP
#define OSFORGE_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osforge/cartan.hpp"
#include "osforge/module.hpp"
#include "osforge/monomial_ideal.hpp"
#include "osforge/poly.hpp"

namespace osforge::homology {

// v regular on M means the complex ... -> M_{d-1} -> M_d -> M_{d+1} -> ...
// of multiplications by v is exact everywhere; checked by ranks.
bool is_regular_element(const std::vector<la::Scalar>& v,
                        const GradedModuleRep& m);

// Exactness checked in degree d only. Sound when M has a d-linear injective
// resolution (the caller certifies that, e.g. d = r(M) for an OS algebra).
bool is_regular_fast(const std::vector<la::Scalar>& v,
                     const GradedModuleRep& m, int d);

// v_1..v_s is M-regular iff H_1(v; M) = 0 and M/(v)M is nonzero.
bool regular_sequence_check(const std::vector<std::vector<la::Scalar>>& vs,
                            const GradedModuleRep& m);

struct DepthResult {
  int value;
  // certificate sequence in the coordinates of the original module
  std::vector<std::vector<la::Scalar>> certificate;
  std::string method;  // "canonical", "randomized", or "canonical+randomized"
};

// Greedy depth: extend a regular sequence by the canonical candidates e_i
// first, then by 'trials' seeded random linear forms per step; each found
// element is quotiented out through a coordinate change onto the last
// generator. The value is certified from below by the returned sequence.
DepthResult depth(const GradedModuleRep& m, int trials, std::uint64_t seed);

struct HilbertFactor {
  int s;             // maximal power of (1+t)
  poly::ZPoly q;     // h / (1+t)^s, q(-1) != 0
};

HilbertFactor hilbert_factor(const poly::ZPoly& h);

struct QuotientInvariants {
  int depth_lower;        // greedy certificate length
  int depth_upper;        // n - cx(gin J)
  bool depth_consistent;  // lower == upper
  int depth;              // the certified value when consistent (else lower)
  int cx;                 // n - depth_upper
  int reg;                // max generator degree of gin(J) minus one
  int d;                  // top nonzero degree of E/J
  poly::ZPoly hilbert;
  monomial::MonomialIdeal gin;
  BettiTable betti;       // truncated table, sanity check for reg
  bool reg_consistent;    // truncated max slope <= reg
  std::string method;
};

// Full invariant record of E/J. Throws std::domain_error on the zero
// quotient (loop case) and propagates GenericityError from gin.
QuotientInvariants invariants(const std::vector<exterior::ExteriorElement>& gens,
                              int n, const la::Field& field, int i_max,
                              std::uint64_t seed, int trials);

struct LinearityReport {
  bool linear;
  int d;  // the single diagonal; -1 when not linear
};

// Does the ideal have a d-linear projective resolution? Certified through
// gin (strongly stable and generated in one degree iff linear) and
// cross-checked against the truncated Betti table. Throws on the zero ideal.
LinearityReport has_linear_projective(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field, int i_max, std::uint64_t seed);

// Does E/J have a d-linear injective resolution? Computed through duality:
// E/J is d-linear injective iff 0:J has an (n-d)-linear projective
// resolution. Throws on the zero quotient.
LinearityReport has_linear_injective(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field, int i_max, std::uint64_t seed);

}  // namespace osforge::homology

#endif  // OSFORGE_INVARIANTS_HPP
