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

#include "osforge/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace osforge::monomial {

namespace {

constexpr int kEnumLimit = 20;

void check_enum(int n, const char* who) {
  if (n > kEnumLimit) {
    throw std::invalid_argument(std::string(who) +
                                ": ground set too large for enumeration");
  }
}

}  // namespace

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> gens) {
  if (n < 0 || n > exterior::kMaxVars) {
    throw std::invalid_argument("MonomialIdeal: n out of range");
  }
  for (Monomial g : gens) {
    if (exterior::max_index(g) > n) {
      throw std::invalid_argument("MonomialIdeal: generator exceeds n");
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (Monomial g : gens) {
    bool redundant = false;
    for (Monomial h : gens) {
      if (h != g && exterior::divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end(), [](Monomial a, Monomial b) {
    int da = exterior::degree(a), db = exterior::degree(b);
    return da != db ? da < db : a < b;
  });
  return MonomialIdeal(n, std::move(minimal));
}

MonomialIdeal minimalize(int n, const std::vector<Monomial>& gens) {
  return MonomialIdeal::make(n, gens);
}

bool MonomialIdeal::contains(Monomial u) const {
  for (Monomial g : gens_) {
    if (exterior::divides(g, u)) return true;
  }
  return false;
}

std::vector<Monomial> MonomialIdeal::monomials() const {
  check_enum(n_, "MonomialIdeal::monomials");
  std::vector<Monomial> out;
  Monomial full = n_ == 0 ? 0 : (Monomial{1} << n_) - 1;
  for (Monomial u = 0;; ++u) {
    if (contains(u)) out.push_back(u);
    if (u == full) break;
  }
  return out;
}

std::vector<Monomial> MonomialIdeal::generators_of_degree(int d) const {
  std::vector<Monomial> out;
  for (Monomial g : gens_) {
    if (exterior::degree(g) == d) out.push_back(g);
  }
  return out;
}

int MonomialIdeal::max_generator_degree() const {
  int out = 0;
  for (Monomial g : gens_) out = std::max(out, exterior::degree(g));
  return out;
}

std::string MonomialIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += exterior::monomial_str(gens_[i]);
  }
  return out + ")";
}

namespace {

bool stability_check(const MonomialIdeal& j, bool strong) {
  for (Monomial u : j.monomials()) {
    if (u == exterior::kOne) return true;  // unit ideal
    Monomial positions = strong ? u : (Monomial{1} << (exterior::max_index(u) - 1));
    Monomial rest = positions;
    while (rest) {
      int i = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      Monomial without = u & ~(Monomial{1} << (i - 1));
      for (int jj = 1; jj < i; ++jj) {
        Monomial bit = Monomial{1} << (jj - 1);
        if (u & bit) continue;  // e_j u / e_i = 0 is trivially in J
        if (!j.contains(without | bit)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_stable(const MonomialIdeal& j) { return stability_check(j, false); }

bool is_strongly_stable(const MonomialIdeal& j) {
  return stability_check(j, true);
}

long long stable_betti(const MonomialIdeal& j, int i, int d) {
  if (!is_stable(j)) {
    throw std::invalid_argument("stable_betti: ideal is not stable");
  }
  long long out = 0;
  for (Monomial u : j.generators_of_degree(d)) {
    int mx = exterior::max_index(u);
    out += exterior::binomial(mx + i - 1, mx - 1);
  }
  return out;
}

long long stable_total_betti(const MonomialIdeal& j, int i) {
  if (!is_stable(j)) {
    throw std::invalid_argument("stable_total_betti: ideal is not stable");
  }
  long long out = 0;
  for (Monomial u : j.generators()) {
    int mx = exterior::max_index(u);
    out += exterior::binomial(mx + i - 1, mx - 1);
  }
  return out;
}

MonomialIdeal power_ideal(int n, int t) {
  if (t < 1 || t > n) {
    throw std::invalid_argument("power_ideal: need 1 <= t <= n");
  }
  return MonomialIdeal::make(
      n, exterior::graded_monomials(n, t, exterior::MonomialOrder::std_revlex));
}

long long power_betti(int n, int t, int i) {
  if (t < 1 || t > n) {
    throw std::invalid_argument("power_betti: need 1 <= t <= n");
  }
  return exterior::binomial(n + i, t + i) * exterior::binomial(t + i - 1, i);
}

int cx_stable(const MonomialIdeal& j) {
  if (j.is_zero()) {
    throw std::invalid_argument("cx_stable: zero ideal");
  }
  if (!is_stable(j)) {
    throw std::invalid_argument("cx_stable: ideal is not stable");
  }
  int out = 0;
  for (Monomial u : j.generators()) {
    out = std::max(out, exterior::max_index(u));
  }
  return out;
}

int d_quotient(const MonomialIdeal& j) {
  if (j.is_zero()) {
    throw std::invalid_argument("d_quotient: zero ideal");
  }
  if (!is_strongly_stable(j)) {
    throw std::invalid_argument("d_quotient: ideal is not strongly stable");
  }
  int mx = 0;
  for (Monomial u : j.generators()) {
    mx = std::max(mx, exterior::min_index(u));
  }
  return j.n() - mx;
}

int d_quotient_direct(const MonomialIdeal& j) {
  if (j.is_unit()) {
    throw std::invalid_argument("d_quotient_direct: zero quotient");
  }
  check_enum(j.n(), "d_quotient_direct");
  int best = 0;
  Monomial full = j.n() == 0 ? 0 : (Monomial{1} << j.n()) - 1;
  for (Monomial u = 0;; ++u) {
    if (!j.contains(u)) best = std::max(best, exterior::degree(u));
    if (u == full) break;
  }
  return best;
}

MonomialIdeal annihilator_monomial(const MonomialIdeal& j) {
  check_enum(j.n(), "annihilator_monomial");
  Monomial full = j.n() == 0 ? 0 : (Monomial{1} << j.n()) - 1;
  std::vector<Monomial> gens;
  for (Monomial f = 0;; ++f) {
    if (!j.contains(full & ~f)) gens.push_back(f);
    if (f == full) break;
  }
  return MonomialIdeal::make(j.n(), std::move(gens));
}

poly::ZPoly hilbert_series(const MonomialIdeal& j) {
  check_enum(j.n(), "hilbert_series");
  std::vector<long long> dims(j.n() + 1, 0);
  Monomial full = j.n() == 0 ? 0 : (Monomial{1} << j.n()) - 1;
  for (Monomial u = 0;; ++u) {
    if (!j.contains(u)) ++dims[exterior::degree(u)];
    if (u == full) break;
  }
  return poly::ZPoly(std::move(dims));
}

}  // namespace osforge::monomial
