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

#ifndef OSFORGE_MONOMIAL_HPP
#define OSFORGE_MONOMIAL_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace osforge::exterior {

// Squarefree monomial e_S as a bitset: bit k-1 set iff index k is in S.
// The empty mask is e_{} = 1. Indices are 1-based externally.
using Monomial = std::uint32_t;

inline constexpr int kMaxVars = 24;
inline constexpr Monomial kOne = 0;

inline int degree(Monomial u) { return std::popcount(u); }
inline bool divides(Monomial u, Monomial w) { return (u & w) == u; }

// 1-based; 0 for the empty monomial (max/min undefined for e_{}).
inline int max_index(Monomial u) {
  return u == 0 ? 0 : std::bit_width(u);
}
inline int min_index(Monomial u) {
  return u == 0 ? 0 : std::countr_zero(u) + 1;
}

std::vector<int> support(Monomial u);  // ascending 1-based indices
Monomial monomial_from_indices(int n, const std::vector<int>& indices);
std::string monomial_str(Monomial u);  // "e[1,2,3]" ; "1" for e_{}

// Sign (-1)^{#inversions} picked up when merging e_S e_T into sorted
// position; the caller ensures the supports are disjoint.
int wedge_sign(Monomial s, Monomial t);

// Total orders on equal-degree squarefree monomials, both induced by
// e_1 > ... > e_n.
//   std_revlex: u > v iff max(supp u  ^  supp v) lies in supp(v).
//               (Small maximal support wins; gin is strongly stable here.)
//   rev_compat: u > v iff max(supp u  ^  supp v) lies in supp(u).
//               (Large indices win; LM(de_C) = e_{C \ min C} here.)
enum class MonomialOrder { std_revlex, rev_compat };

MonomialOrder order_from_name(const std::string& name);  // "std" | "rev"
std::string order_name(MonomialOrder o);

// Strict comparison of equal-degree monomials under the given order.
bool monomial_greater(Monomial u, Monomial v, MonomialOrder order);

// All C(n, d) degree-d monomials, largest first under the given order.
std::vector<Monomial> graded_monomials(int n, int d, MonomialOrder order);

long long binomial(long long n, long long k);

}  // namespace osforge::exterior

#endif  // OSFORGE_MONOMIAL_HPP
