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

#ifndef OSFORGE_GROEBNER_HPP
#define OSFORGE_GROEBNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "osforge/exterior.hpp"
#include "osforge/monomial_ideal.hpp"

namespace osforge::groebner {

// Raised when randomized genericity fails: independent random coordinate
// changes disagree, or the candidate gin is not strongly stable. Signals
// "rerun with another seed or a larger field", never a wrong value.
class GenericityError : public std::runtime_error {
 public:
  explicit GenericityError(const std::string& what)
      : std::runtime_error(what) {}
};

// ini(J) computed degreewise: E is finite dimensional, so each graded piece
// J_d is row-reduced over the full degree-d monomial basis (largest first)
// and the pivot monomials generate ini(J)_d; no Buchberger machinery.
monomial::MonomialIdeal initial_ideal(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field, exterior::MonomialOrder order);

// Generic initial ideal under std_revlex (the strongly-stable-compatible
// order): ini(g J) for 'attempts' independent seeded random invertible g.
// Returned only if all attempts agree and the result is strongly stable;
// GenericityError otherwise.
monomial::MonomialIdeal gin(const std::vector<exterior::ExteriorElement>& gens,
                            int n, const la::Field& field, int attempts,
                            std::uint64_t seed);

struct GinSuiteReport {
  bool dual_ini = false;       // ini(0:J) = 0:ini(J)
  bool dual_gin = false;       // gin(0:J) = 0:gin(J)
  bool betti_monotone = false; // beta(E/J) <= beta(E/ini J) entrywise
  bool mu_monotone = false;    // mu(E/J) <= mu(E/ini J) entrywise
  bool depth_transfer = false; // depth E/J = depth E/gin(J)
  bool cx_transfer = false;
  bool hilbert_preserved = false;  // H(E/J) = H(E/ini J) = H(E/gin J)
  std::vector<std::string> failures;

  bool all_ok() const {
    return dual_ini && dual_gin && betti_monotone && mu_monotone &&
           depth_transfer && cx_transfer && hilbert_preserved;
  }
};

// Runs the ini/gin comparison theorems on one ideal; E/J must be nonzero.
GinSuiteReport gin_theorem_suite(
    const std::vector<exterior::ExteriorElement>& gens, int n,
    const la::Field& field, int i_max, std::uint64_t seed, int trials);

// Monomial generators as single-term elements, for feeding a MonomialIdeal
// back through the general ideal machinery.
std::vector<exterior::ExteriorElement> monomial_generators(
    const monomial::MonomialIdeal& j, const la::Field& field);

}  // namespace osforge::groebner

#endif  // OSFORGE_GROEBNER_HPP
