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

#ifndef OSFORGE_OS_ALGEBRA_HPP
#define OSFORGE_OS_ALGEBRA_HPP

#include <vector>

#include "osforge/exterior.hpp"
#include "osforge/matroid.hpp"
#include "osforge/monomial_ideal.hpp"
#include "osforge/poly.hpp"

namespace osforge::osalg {

// The Orlik-Solomon ideal of a matroid: one generator boundary(e_C) per
// circuit C, in sorted circuit order. If the matroid has a loop then 1 lies
// in the ideal and E/J is the zero module.
struct OSIdeal {
  matroid::Matroid m;
  std::vector<exterior::ExteriorElement> generators;

  int n() const { return m.n(); }
  bool has_unit() const { return m.has_loops(); }
};

OSIdeal os_ideal(const matroid::Matroid& m, const la::Field& field);

// The reduced generating set for uniform matroids: boundary(e_A) over the
// (m+1)-subsets A containing 1. Generates the same ideal as
// os_ideal(uniform(m, n)).
OSIdeal os_ideal_uniform_reduced(int m, int n, const la::Field& field);

// For a loopless matroid, e_S lies in J(M) iff S is dependent.
bool monomial_in_os_ideal(const matroid::Matroid& m, matroid::SetMask s);

// The ideal generated by the broken circuits; equals ini(J) under the
// rev_compat order. Throws on loops.
monomial::MonomialIdeal broken_circuit_ideal(const matroid::Matroid& m);

// Hilbert series of E/J by two independent combinatorial routes: counting
// nbc sets by cardinality, and the signed Mobius sum over the lattice of
// flats. Both return the zero polynomial when the matroid has a loop.
poly::ZPoly hilbert_nbc(const matroid::Matroid& m);
poly::ZPoly hilbert_charpoly(const matroid::Matroid& m);

// The common value of the two routes; throws std::logic_error on mismatch.
poly::ZPoly hilbert_series(const matroid::Matroid& m);

}  // namespace osforge::osalg

#endif  // OSFORGE_OS_ALGEBRA_HPP
