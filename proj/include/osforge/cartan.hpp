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

#ifndef OSFORGE_CARTAN_HPP
#define OSFORGE_CARTAN_HPP

#include <map>
#include <string>
#include <vector>

#include "osforge/module.hpp"

namespace osforge::homology {

// Graded dimensions of one homology module: degree -> dim, zeros omitted.
struct GradedDims {
  std::map<int, int> by_degree;
  int at(int d) const {
    auto it = by_degree.find(d);
    return it == by_degree.end() ? 0 : it->second;
  }
  long long total() const {
    long long out = 0;
    for (const auto& [d, v] : by_degree) out += v;
    return out;
  }
  bool all_zero() const { return by_degree.empty(); }
};

// Cartan homology H_i(v; M) for i <= i_max. C_i has basis x^(a) tensor b
// with |a| = i over the divided-power generators x_1..x_m (deg x_j = 1); the
// differential sends x^(a) to sum_{a_j > 0} v_j x^(a - e_j).
std::vector<GradedDims> cartan_homology(
    const std::vector<std::vector<la::Scalar>>& v, const GradedModuleRep& m,
    int i_max);

// Cartan cohomology H^i(v; M): the dual complex, i.e. multiplication by
// sum v_j y_j on polynomials in y with module coefficients (deg y_j = -1).
std::vector<GradedDims> cartan_cohomology(
    const std::vector<std::vector<la::Scalar>>& v, const GradedModuleRep& m,
    int i_max);

// The matrix of the differential C_i(v;M)_t -> C_{i-1}(v;M)_t, with basis
// slots ordered lexicographically. Consecutive differentials compose to
// zero; exposed for structural tests.
la::SparseMatrix cartan_differential(
    const std::vector<std::vector<la::Scalar>>& v, const GradedModuleRep& m,
    int i, int t);

// (i, j) -> count table, used for both Betti and Bass numbers; entries with
// count zero are omitted.
struct HomTable {
  int i_max = 0;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const;
  long long total(int i) const;
  // max of j - i over nonzero entries; -1 when the table is empty
  int max_slope() const;
  std::string str(const std::string& label) const;

  bool operator==(const HomTable& o) const { return entries == o.entries; }
};

using BettiTable = HomTable;
using BassTable = HomTable;

// beta_{i,j}(M) = dim H_i(e_1..e_n; M)_j for i <= i_max.
BettiTable betti_table(const GradedModuleRep& m, int i_max);

// mu_{i,j}(E/J) = beta_{i,n-j}(0 : J) through the annihilator ideal.
BassTable bass_table(const std::vector<exterior::ExteriorElement>& quotient_gens,
                     int n, const la::Field& field, int i_max);

// mu_{i,j}(M) = dim H^i(e_1..e_n; M)_j computed directly on the Cartan
// cocomplex; cross-check route for bass_table.
BassTable bass_table_cocomplex(const GradedModuleRep& m, int i_max);

// Coordinates of the canonical sequence e_1, ..., e_n.
std::vector<std::vector<la::Scalar>> canonical_sequence(int n,
                                                        const la::Field& field);

}  // namespace osforge::homology

#endif  // OSFORGE_CARTAN_HPP
