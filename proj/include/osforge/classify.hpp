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

#ifndef OSFORGE_CLASSIFY_HPP
#define OSFORGE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "osforge/matroid.hpp"

namespace osforge::classify {

enum class LinearClassKind {
  loop_case,             // a loop is present; J = E, 0-linear
  parallel_sums,         // U_{1,n_1} + ... + U_{1,n_k} + U_{f,f}, 1-linear
  uniform_plus_coloops,  // U_{m,n-f} + U_{f,f}, m-linear
  not_linear,
};

struct LinearResolutionClass {
  LinearClassKind kind;
  int m = 0;               // linearity degree of J, when linear
  int f = 0;               // number of coloops
  std::vector<int> parts;  // sizes n_1..n_k for parallel_sums

  bool is_linear() const { return kind != LinearClassKind::not_linear; }
};

std::string class_kind_name(LinearClassKind k);

// Structural decision of whether the Orlik-Solomon ideal has an m-linear
// projective resolution: a loop, or a sum of rank-1 uniforms plus coloops,
// or a uniform matroid plus coloops. Uniformity of the coloop-free part is
// decided combinatorially: every (rank+1)-subset must be a circuit.
LinearResolutionClass classify_linear_resolution(const matroid::Matroid& m);

// Closed-form total Betti number of the OS ideal for the two linear
// classes; nullopt outside them (never silently zero).
std::optional<long long> predicted_betti(const matroid::Matroid& m, int i);

struct PredictedInvariants {
  int depth;  // number of components k
  int cx;     // n - k
  int reg;    // rank - k
  int d;      // rank
};

// The four invariants of a loopless OS algebra from (n, rank, components)
// alone. Throws std::invalid_argument on loops.
PredictedInvariants predicted_invariants(const matroid::Matroid& m);

enum class Rank3Profile { pencil, near_pencil, other_simple_rank3, not_applicable };

std::string rank3_profile_name(Rank3Profile p);

// Pencil / near-pencil recognition; for simple rank-3 input the matroid is
// connected exactly when it is not a near pencil (checked internally).
Rank3Profile rank3_profile(const matroid::Matroid& m);

}  // namespace osforge::classify

#endif  // OSFORGE_CLASSIFY_HPP
