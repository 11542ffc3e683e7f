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

#ifndef OSFORGE_MONOMIAL_IDEAL_HPP
#define OSFORGE_MONOMIAL_IDEAL_HPP

#include <vector>

#include "osforge/monomial.hpp"
#include "osforge/poly.hpp"

namespace osforge::monomial {

using exterior::Monomial;

// Monomial ideal in E, held by its unique minimal system of generators
// (an antichain under divisibility). The unit ideal is generated by e_{} = 1.
class MonomialIdeal {
 public:
  static MonomialIdeal make(int n, std::vector<Monomial> gens);
  static MonomialIdeal zero(int n) { return make(n, {}); }

  int n() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_[0] == exterior::kOne; }

  // u in J iff some generator divides u.
  bool contains(Monomial u) const;

  // All monomials of J (degree <= n); enumeration guarded at n <= 20.
  std::vector<Monomial> monomials() const;

  // Minimal generators of degree d.
  std::vector<Monomial> generators_of_degree(int d) const;
  int max_generator_degree() const;  // 0 for the zero ideal

  bool operator==(const MonomialIdeal& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string str() const;

 private:
  MonomialIdeal(int n, std::vector<Monomial> gens)
      : n_(n), gens_(std::move(gens)) {}

  int n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, const std::vector<Monomial>& gens);

// J is stable if e_j u / e_{max(u)} lies in J for every monomial u of J and
// j < max(u); strongly stable replaces max(u) by any i in supp(u). Checked
// on the full monomial set of J, not only on G(J).
bool is_stable(const MonomialIdeal& j);
bool is_strongly_stable(const MonomialIdeal& j);

// beta_{i,i+d}(J) for stable J: sum over degree-d minimal generators u of
// binom(max(u)+i-1, max(u)-1). Throws if J is not stable.
long long stable_betti(const MonomialIdeal& j, int i, int d);
long long stable_total_betti(const MonomialIdeal& j, int i);

// The power m^t of the maximal ideal, and its graded Betti numbers
// beta_{i,i+t}(m^t) = binom(n+i, t+i) binom(t+i-1, i).
MonomialIdeal power_ideal(int n, int t);
long long power_betti(int n, int t, int i);

// cx E/J = max{max(u) : u in G(J)} for stable nonzero J.
int cx_stable(const MonomialIdeal& j);

// d(E/J) = n - max{min(u) : u in G(J)} for strongly stable nonzero J.
int d_quotient(const MonomialIdeal& j);
// Top nonzero degree of E/J by direct basis enumeration; no stability
// assumption. Throws for the unit ideal (zero quotient).
int d_quotient_direct(const MonomialIdeal& j);

// 0 :_E J, generated by the monomials e_F with e_{F^c} not in J.
MonomialIdeal annihilator_monomial(const MonomialIdeal& j);

// Hilbert series of E/J.
poly::ZPoly hilbert_series(const MonomialIdeal& j);

}  // namespace osforge::monomial

#endif  // OSFORGE_MONOMIAL_IDEAL_HPP
