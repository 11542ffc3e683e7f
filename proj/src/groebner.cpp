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

#include "osforge/groebner.hpp"

#include <random>

#include "osforge/invariants.hpp"
#include "osforge/module.hpp"

namespace osforge::groebner {

using exterior::ExteriorElement;
using exterior::Monomial;
using la::Field;

monomial::MonomialIdeal initial_ideal(const std::vector<ExteriorElement>& gens,
                                      int n, const Field& field,
                                      exterior::MonomialOrder order) {
  homology::DegreewiseSpans spans =
      homology::degreewise_spans(gens, n, field, order);
  std::vector<Monomial> pivots;
  for (int d = 0; d <= n; ++d) {
    pivots.insert(pivots.end(), spans.pivot_monomials[d].begin(),
                  spans.pivot_monomials[d].end());
  }
  return monomial::MonomialIdeal::make(n, std::move(pivots));
}

monomial::MonomialIdeal gin(const std::vector<ExteriorElement>& gens, int n,
                            const Field& field, int attempts,
                            std::uint64_t seed) {
  if (attempts < 1) {
    throw std::invalid_argument("gin: attempts must be positive");
  }
  std::optional<monomial::MonomialIdeal> candidate;
  for (int a = 0; a < attempts; ++a) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(a));
    auto g = exterior::random_invertible_matrix(n, field, rng);
    monomial::MonomialIdeal ini_a = initial_ideal(
        exterior::substitute_all(gens, g), n, field,
        exterior::MonomialOrder::std_revlex);
    if (!candidate) {
      candidate = ini_a;
    } else if (*candidate != ini_a) {
      throw GenericityError(
          "gin: random coordinate changes disagree (seed " +
          std::to_string(seed) + ", attempt " + std::to_string(a) +
          "): " + candidate->str() + " vs " + ini_a.str());
    }
  }
  if (!monomial::is_strongly_stable(*candidate)) {
    throw GenericityError("gin: candidate " + candidate->str() +
                          " is not strongly stable (seed " +
                          std::to_string(seed) + ")");
  }
  return *candidate;
}

std::vector<ExteriorElement> monomial_generators(
    const monomial::MonomialIdeal& j, const Field& field) {
  std::vector<ExteriorElement> out;
  out.reserve(j.generators().size());
  for (Monomial u : j.generators()) {
    out.push_back(ExteriorElement::term(j.n(), field, u, field.one()));
  }
  return out;
}

namespace {

bool entrywise_le(const homology::HomTable& a, const homology::HomTable& b,
                  int i_cap, std::string* witness, const char* label) {
  for (const auto& [key, v] : a.entries) {
    if (key.first > i_cap) continue;
    if (v > b.at(key.first, key.second)) {
      *witness = std::string(label) + "_{" + std::to_string(key.first) + "," +
                 std::to_string(key.second) + "}: " + std::to_string(v) +
                 " > " + std::to_string(b.at(key.first, key.second));
      return false;
    }
  }
  return true;
}

}  // namespace

GinSuiteReport gin_theorem_suite(const std::vector<ExteriorElement>& gens,
                                 int n, const Field& field, int i_max,
                                 std::uint64_t seed, int trials) {
  GinSuiteReport report;
  homology::GradedModuleRep quotient =
      homology::module_from_quotient(gens, n, field);
  if (quotient.is_zero()) {
    throw std::domain_error("gin_theorem_suite: zero quotient");
  }

  monomial::MonomialIdeal ini_j =
      initial_ideal(gens, n, field, exterior::MonomialOrder::std_revlex);
  monomial::MonomialIdeal gin_j = gin(gens, n, field, 3, seed);
  std::vector<ExteriorElement> ann = homology::annihilator(gens, n, field);

  // (a) duality commutes with taking initial ideals
  {
    monomial::MonomialIdeal ini_ann =
        initial_ideal(ann, n, field, exterior::MonomialOrder::std_revlex);
    monomial::MonomialIdeal ann_ini = monomial::annihilator_monomial(ini_j);
    report.dual_ini = (ini_ann == ann_ini);
    if (!report.dual_ini) {
      report.failures.push_back("ini(0:J) = " + ini_ann.str() +
                                " but 0:ini(J) = " + ann_ini.str());
    }
    monomial::MonomialIdeal gin_ann = gin(ann, n, field, 3, seed + 101);
    monomial::MonomialIdeal ann_gin = monomial::annihilator_monomial(gin_j);
    report.dual_gin = (gin_ann == ann_gin);
    if (!report.dual_gin) {
      report.failures.push_back("gin(0:J) = " + gin_ann.str() +
                                " but 0:gin(J) = " + ann_gin.str());
    }
  }

  // (b) entrywise monotonicity of Betti and Bass numbers under ini
  {
    auto ini_gens = monomial_generators(ini_j, field);
    homology::BettiTable b_j = homology::betti_table(quotient, i_max);
    homology::BettiTable b_ini = homology::betti_table(
        homology::module_from_quotient(ini_gens, n, field), i_max);
    std::string witness;
    report.betti_monotone = entrywise_le(b_j, b_ini, i_max, &witness, "beta");
    if (!report.betti_monotone) report.failures.push_back(witness);

    homology::BassTable mu_j = homology::bass_table(gens, n, field, i_max);
    homology::BassTable mu_ini =
        homology::bass_table(ini_gens, n, field, i_max);
    report.mu_monotone = entrywise_le(mu_j, mu_ini, i_max, &witness, "mu");
    if (!report.mu_monotone) report.failures.push_back(witness);
  }

  // (c) depth and cx transfer to the gin
  {
    homology::DepthResult depth_j = homology::depth(quotient, trials, seed);
    homology::DepthResult depth_gin = homology::depth(
        homology::module_from_quotient(monomial_generators(gin_j, field), n,
                                       field),
        trials, seed);
    int cx_gin = gin_j.is_zero() ? 0 : monomial::cx_stable(gin_j);
    report.depth_transfer =
        depth_j.value == depth_gin.value && depth_j.value == n - cx_gin;
    if (!report.depth_transfer) {
      report.failures.push_back(
          "depth E/J = " + std::to_string(depth_j.value) +
          ", depth E/gin = " + std::to_string(depth_gin.value) +
          ", n - cx(gin) = " + std::to_string(n - cx_gin));
    }
    report.cx_transfer = (n - depth_j.value) == cx_gin;
    if (!report.cx_transfer) {
      report.failures.push_back("cx E/J = " + std::to_string(n - depth_j.value) +
                                " but cx(gin) = " + std::to_string(cx_gin));
    }
  }

  // (d) Hilbert series preservation
  {
    poly::ZPoly h = quotient.hilbert();
    poly::ZPoly h_ini = monomial::hilbert_series(ini_j);
    poly::ZPoly h_gin = monomial::hilbert_series(gin_j);
    report.hilbert_preserved = (h == h_ini) && (h == h_gin);
    if (!report.hilbert_preserved) {
      report.failures.push_back("H(E/J) = " + h.str() + ", H(E/ini) = " +
                                h_ini.str() + ", H(E/gin) = " + h_gin.str());
    }
  }
  return report;
}

}  // namespace osforge::groebner
