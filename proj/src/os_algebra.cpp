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

#include "osforge/os_algebra.hpp"

#include <stdexcept>

namespace osforge::osalg {

using exterior::ExteriorElement;

OSIdeal os_ideal(const matroid::Matroid& m, const la::Field& field) {
  OSIdeal out{m, {}};
  out.generators.reserve(m.circuits().size());
  for (matroid::SetMask c : m.circuits()) {
    out.generators.push_back(exterior::boundary(
        ExteriorElement::term(m.n(), field, static_cast<exterior::Monomial>(c),
                              field.one())));
  }
  return out;
}

OSIdeal os_ideal_uniform_reduced(int m, int n, const la::Field& field) {
  if (m < 1 || m >= n) {
    throw std::invalid_argument("os_ideal_uniform_reduced: need 1 <= m < n");
  }
  OSIdeal out{matroid::Matroid::uniform(m, n), {}};
  for (exterior::Monomial a :
       exterior::graded_monomials(n, m + 1, exterior::MonomialOrder::std_revlex)) {
    if (a & 1) {  // 1 in A
      out.generators.push_back(
          exterior::boundary(ExteriorElement::term(n, field, a, field.one())));
    }
  }
  std::sort(out.generators.begin(), out.generators.end(),
            [](const ExteriorElement& x, const ExteriorElement& y) {
              return x.terms().begin()->first < y.terms().begin()->first;
            });
  return out;
}

bool monomial_in_os_ideal(const matroid::Matroid& m, matroid::SetMask s) {
  if (m.has_loops()) {
    throw std::invalid_argument("monomial_in_os_ideal: matroid has a loop");
  }
  return m.is_dependent(s);
}

monomial::MonomialIdeal broken_circuit_ideal(const matroid::Matroid& m) {
  if (m.has_loops()) {
    throw std::invalid_argument("broken_circuit_ideal: matroid has a loop");
  }
  std::vector<exterior::Monomial> gens;
  for (matroid::SetMask b : m.broken_circuits()) {
    gens.push_back(static_cast<exterior::Monomial>(b));
  }
  return monomial::MonomialIdeal::make(m.n(), std::move(gens));
}

poly::ZPoly hilbert_nbc(const matroid::Matroid& m) {
  if (m.has_loops()) return poly::ZPoly();
  std::vector<long long> counts(m.n() + 1, 0);
  for (matroid::SetMask s : m.nbc_sets()) {
    ++counts[std::popcount(s)];
  }
  return poly::ZPoly(std::move(counts));
}

poly::ZPoly hilbert_charpoly(const matroid::Matroid& m) {
  if (m.has_loops()) return poly::ZPoly();
  matroid::FlatsLattice l = m.flats_lattice();
  std::vector<long long> mu = matroid::mobius(l);
  std::vector<long long> coeffs(m.rank() + 1, 0);
  for (std::size_t i = 0; i < l.flats.size(); ++i) {
    int r = l.flats[i].rank;
    coeffs[r] += (r % 2 == 0 ? 1 : -1) * mu[i];
  }
  return poly::ZPoly(std::move(coeffs));
}

poly::ZPoly hilbert_series(const matroid::Matroid& m) {
  poly::ZPoly nbc = hilbert_nbc(m);
  poly::ZPoly charpoly = hilbert_charpoly(m);
  if (nbc != charpoly) {
    throw std::logic_error("hilbert_series: nbc and Mobius routes disagree");
  }
  return nbc;
}

}  // namespace osforge::osalg
