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

#ifndef OSFORGE_EXTERIOR_HPP
#define OSFORGE_EXTERIOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osforge/field.hpp"
#include "osforge/monomial.hpp"
#include "osforge/sparse_matrix.hpp"

namespace osforge::exterior {

// Element of the exterior algebra E = K<e_1,...,e_n>: a zero-free map from
// signed squarefree monomials to coefficients, tied to its algebra context
// (n, field). Values are immutable in spirit; all operations return new
// elements and are safe to call concurrently.
class ExteriorElement {
 public:
  ExteriorElement(int n, la::Field field);

  static ExteriorElement zero(int n, const la::Field& field);
  static ExteriorElement unit(int n, const la::Field& field);  // e_{} = 1
  static ExteriorElement variable(int n, const la::Field& field, int i);
  static ExteriorElement term(int n, const la::Field& field, Monomial u,
                              const la::Scalar& c);

  int n() const { return n_; }
  const la::Field& field() const { return field_; }
  const std::map<Monomial, la::Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  la::Scalar coeff(Monomial u) const;

  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element; throws otherwise.
  int degree() const;
  ExteriorElement homogeneous_component(int d) const;

  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator-(const ExteriorElement& o) const;
  ExteriorElement scaled(const la::Scalar& c) const;
  ExteriorElement negated() const;

  bool equals(const ExteriorElement& o) const;

  // Coordinates over an explicit monomial basis (column index = position in
  // basis). Throws if a term's monomial is missing from the basis.
  la::SparseMatrix::Row coords(const std::vector<Monomial>& basis) const;
  static ExteriorElement from_coords(int n, const la::Field& field,
                                     const std::vector<Monomial>& basis,
                                     const la::SparseMatrix::Row& row);

  std::string str() const;

 private:
  void add_term(Monomial u, const la::Scalar& c);

  int n_;
  la::Field field_;
  std::map<Monomial, la::Scalar> terms_;

  friend ExteriorElement wedge(const ExteriorElement&, const ExteriorElement&);
  friend ExteriorElement boundary(const ExteriorElement&);
};

// Bilinear associative product; e_S ^ e_T = 0 whenever supports meet.
// Throws std::invalid_argument on algebra-context mismatch.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

// The degree -1 derivation with boundary(e_i) = 1 and the signed alternating
// expansion on monomials; satisfies boundary(boundary(x)) = 0 and the graded
// Leibniz rule.
ExteriorElement boundary(const ExteriorElement& a);

// Image of a under the algebra endomorphism e_i -> sum_j g[i][j] e_j.
// g must be square of size n and invertible (throws on singular g).
ExteriorElement substitute(const ExteriorElement& a,
                           const std::vector<std::vector<la::Scalar>>& g);

// Same map applied to a family; invertibility checked once.
std::vector<ExteriorElement> substitute_all(
    const std::vector<ExteriorElement>& elems,
    const std::vector<std::vector<la::Scalar>>& g);

// Degree-d monomial basis of E, largest first (see graded_monomials).
std::vector<Monomial> graded_basis(int n, int d, MonomialOrder order);

// Text format: "e[1,2]-e[1,3]+2e[2,3]", "1", "-3/2e[1]". Over GF(p),
// residues above p/2 render balanced (as negatives); parse accepts both.
ExteriorElement parse_element(int n, const la::Field& field,
                              const std::string& text);

std::vector<std::vector<la::Scalar>> random_invertible_matrix(
    int n, const la::Field& field, std::mt19937_64& rng);

}  // namespace osforge::exterior

#endif  // OSFORGE_EXTERIOR_HPP
