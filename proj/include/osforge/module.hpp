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

#ifndef OSFORGE_MODULE_HPP
#define OSFORGE_MODULE_HPP

#include <vector>

#include "osforge/exterior.hpp"
#include "osforge/poly.hpp"
#include "osforge/sparse_matrix.hpp"

namespace osforge::homology {

// Module construction keeps full per-degree monomial bases; this caps the
// ambient algebra at a size where 2^n stays workable.
inline constexpr int kModuleVarLimit = 16;

// A finitely generated graded E-module given by per-degree dimensions and,
// for each algebra generator e_i, the matrices of left multiplication
// M_d -> M_{d+1}. The right action follows from the sign rule of the module
// category and is never stored. Immutable after construction.
class GradedModuleRep {
 public:
  GradedModuleRep(int n, la::Field field, std::vector<int> dims,
                  std::vector<std::vector<la::SparseMatrix>> mult,
                  std::vector<std::vector<exterior::ExteriorElement>> basis);

  int n() const { return n_; }
  const la::Field& field() const { return field_; }

  // Highest storable degree; dims beyond are zero.
  int max_degree() const { return static_cast<int>(dims_.size()) - 1; }
  int dim(int d) const;
  long long total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  int top_degree() const;  // -1 for the zero module
  poly::ZPoly hilbert() const;

  // Left multiplication by e_i (1-based): M_d -> M_{d+1}.
  la::SparseMatrix action(int i, int d) const;
  // Left multiplication by the degree-1 element with the given coordinates
  // (coords[k] is the coefficient of e_{k+1}).
  la::SparseMatrix action_of(const std::vector<la::Scalar>& coords, int d) const;

  bool has_basis() const { return !basis_.empty(); }
  const std::vector<exterior::ExteriorElement>& basis(int d) const;

  // Checks e_i e_i = 0 and graded anticommutation of the stored actions;
  // throws std::logic_error with the offending pair on failure.
  void validate() const;

 private:
  int n_;
  la::Field field_;
  std::vector<int> dims_;
  // mult_[i][d]: action of e_{i+1} from degree d, shape dim(d+1) x dim(d)
  std::vector<std::vector<la::SparseMatrix>> mult_;
  std::vector<std::vector<exterior::ExteriorElement>> basis_;  // may be empty
};

// Degreewise spans of the ideal generated by homogeneous elements: for each
// degree d, the row-reduced span of all monomial multiples of the
// generators over the degree-d monomial basis (largest monomial first under
// the given order). Pivot monomials are the degreewise leading monomials.
struct DegreewiseSpans {
  int n;
  la::Field field;
  exterior::MonomialOrder order;
  std::vector<std::vector<exterior::Monomial>> basis;  // per degree
  std::vector<la::RrefResult> span;                    // per degree
  std::vector<std::vector<exterior::Monomial>> pivot_monomials;

  int dim_ideal(int d) const { return span[d].rank(); }
};

DegreewiseSpans degreewise_spans(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field, exterior::MonomialOrder order);

// E/J for the ideal J generated by the given homogeneous elements. The
// basis of each degree consists of the non-pivot monomials.
GradedModuleRep module_from_quotient(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field);

// The ideal J itself as a graded submodule of E; per-degree basis given by
// the reduced row basis of the degreewise span.
GradedModuleRep module_from_ideal(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field);

// Generators of 0 :_E J = {a : a g = 0 for all g in J}, found degreewise by
// kernel computations; minimal by construction (each degree contributes the
// complement of what lower degrees already generate).
std::vector<exterior::ExteriorElement> annihilator(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field);

// M/vM over the exterior algebra on n-1 generators: an invertible change of
// coordinates maps v to the last generator, which is then dropped. The
// surviving generators are the e_i with i != pivot(v), in order.
GradedModuleRep quotient_by_linear_form(const GradedModuleRep& m,
                                        const std::vector<la::Scalar>& v);

}  // namespace osforge::homology

#endif  // OSFORGE_MODULE_HPP
