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

#include <random>

#include "doctest.h"
#include "osforge/groebner.hpp"
#include "osforge/invariants.hpp"
#include "osforge/os_algebra.hpp"

using namespace osforge;
using exterior::ExteriorElement;
using homology::GradedModuleRep;
using la::Field;
using la::Scalar;
using matroid::Matroid;

namespace {

const Field kField = Field::prime(la::kDefaultPrime);

std::vector<ExteriorElement> os_gens(const Matroid& m) {
  return osalg::os_ideal(m, kField).generators;
}

std::vector<Scalar> unit(int n, int i) {
  std::vector<Scalar> v(n, kField.zero());
  v[i - 1] = kField.one();
  return v;
}

std::vector<ExteriorElement> counterexample_gens() {
  // (e12, e13, e14, e234) in n = 4: the quotient has (1+t) | H yet depth 0
  return {exterior::parse_element(4, kField, "e[1,2]"),
          exterior::parse_element(4, kField, "e[1,3]"),
          exterior::parse_element(4, kField, "e[1,4]"),
          exterior::parse_element(4, kField, "e[2,3,4]")};
}

}  // namespace

TEST_CASE("regular elements") {
  auto os23 = homology::module_from_quotient(os_gens(Matroid::uniform(2, 3)),
                                             3, kField);
  CHECK(homology::is_regular_element(unit(3, 1), os23));
  CHECK(homology::is_regular_element(unit(3, 2), os23));
  CHECK(homology::is_regular_element(unit(3, 3), os23));

  // any nonzero linear form is regular on the free module E
  auto e = homology::module_from_quotient({}, 3, kField);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> v(3, kField.zero());
    bool nonzero = false;
    for (auto& c : v) {
      c = kField.random(rng);
      nonzero = nonzero || !kField.is_zero(c);
    }
    if (!nonzero) continue;
    CHECK(homology::is_regular_element(v, e));
  }

  // the counterexample quotient admits no regular linear form
  auto bad = homology::module_from_quotient(counterexample_gens(), 4, kField);
  for (int i = 1; i <= 4; ++i) {
    CHECK(!homology::is_regular_element(unit(4, i), bad));
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> v(4, kField.zero());
    bool nonzero = false;
    for (auto& c : v) {
      c = kField.random(rng);
      nonzero = nonzero || !kField.is_zero(c);
    }
    if (!nonzero) continue;
    CHECK(!homology::is_regular_element(v, bad));
  }
}

TEST_CASE("fast regularity check at the top degree") {
  auto os23 = homology::module_from_quotient(os_gens(Matroid::uniform(2, 3)),
                                             3, kField);
  CHECK(homology::is_regular_fast(unit(3, 1), os23, 2));

  auto os12 = homology::module_from_quotient(os_gens(Matroid::uniform(1, 2)),
                                             2, kField);
  std::vector<Scalar> e1_plus_e2 = {kField.one(), kField.one()};
  CHECK(homology::is_regular_fast(e1_plus_e2, os12, 1));

  // agreement with the full check on random pairs, d = r(M)
  std::mt19937_64 rng(17);
  std::vector<Matroid> zoo = {
      Matroid::uniform(2, 3), Matroid::uniform(2, 4), Matroid::uniform(3, 4),
      Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1)),
      Matroid::from_circuits(5, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}})};
  int pairs = 0;
  while (pairs < 100) {
    const Matroid& m = zoo[rng() % zoo.size()];
    auto mod = homology::module_from_quotient(os_gens(m), m.n(), kField);
    std::vector<Scalar> v(m.n(), kField.zero());
    for (auto& c : v) c = kField.random(rng);
    bool nonzero = false;
    for (const auto& c : v) nonzero = nonzero || !kField.is_zero(c);
    if (!nonzero) continue;
    CHECK(homology::is_regular_fast(v, mod, m.rank()) ==
          homology::is_regular_element(v, mod));
    ++pairs;
  }
}

TEST_CASE("regular sequence check") {
  auto np = Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1));
  auto mod = homology::module_from_quotient(os_gens(np), 4, kField);
  CHECK(homology::regular_sequence_check({unit(4, 1), unit(4, 4)}, mod));
  // permutations of regular sequences are regular sequences
  CHECK(homology::regular_sequence_check({unit(4, 4), unit(4, 1)}, mod));
  // e_1, e_2 lie in the same component: not a regular sequence
  CHECK(!homology::regular_sequence_check({unit(4, 1), unit(4, 2)}, mod));

  auto os23 = homology::module_from_quotient(os_gens(Matroid::uniform(2, 3)),
                                             3, kField);
  CHECK(!homology::regular_sequence_check({unit(3, 1), unit(3, 2)}, os23));
  CHECK(homology::regular_sequence_check({}, os23));
}

TEST_CASE("depth") {
  auto os23 = homology::module_from_quotient(os_gens(Matroid::uniform(2, 3)),
                                             3, kField);
  auto d1 = homology::depth(os23, 8, 1);
  CHECK(d1.value == 1);
  CHECK(d1.certificate.size() == 1);
  CHECK(homology::regular_sequence_check(d1.certificate, os23));

  auto np = Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1));
  auto mod_np = homology::module_from_quotient(os_gens(np), 4, kField);
  auto d2 = homology::depth(mod_np, 8, 1);
  CHECK(d2.value == 2);
  CHECK(homology::regular_sequence_check(d2.certificate, mod_np));

  auto bad = homology::module_from_quotient(counterexample_gens(), 4, kField);
  CHECK(homology::depth(bad, 8, 1).value == 0);

  auto free = homology::module_from_quotient({}, 4, kField);
  CHECK(homology::depth(free, 8, 1).value == 4);

  auto residue = homology::module_from_quotient(
      groebner::monomial_generators(monomial::power_ideal(3, 1), kField), 3,
      kField);
  CHECK(homology::depth(residue, 8, 1).value == 0);
}

TEST_CASE("hilbert factorization") {
  auto f1 = homology::hilbert_factor(poly::ZPoly({1, 3, 2}));
  CHECK(f1.s == 1);
  CHECK(f1.q == poly::ZPoly({1, 2}));

  auto f2 = homology::hilbert_factor(poly::ZPoly({1, 1}) * poly::ZPoly({1, 1}) *
                                     poly::ZPoly({1, 2}));
  CHECK(f2.s == 2);

  auto f3 = homology::hilbert_factor(poly::ZPoly({1, 4, 3}));
  CHECK(f3.s == 1);
  CHECK(f3.q == poly::ZPoly({1, 3}));

  CHECK_THROWS_AS(homology::hilbert_factor(poly::ZPoly()),
                  std::invalid_argument);
}

TEST_CASE("invariants of OS algebras") {
  auto u25 = homology::invariants(os_gens(Matroid::uniform(2, 5)), 5, kField,
                                  4, 1, 8);
  CHECK(u25.depth == 1);
  CHECK(u25.cx == 4);
  CHECK(u25.reg == 1);
  CHECK(u25.d == 2);
  CHECK(u25.depth_consistent);
  CHECK(u25.reg_consistent);

  auto np5 = Matroid::direct_sum(Matroid::uniform(2, 4), Matroid::uniform(1, 1));
  auto inv_np5 =
      homology::invariants(os_gens(np5), 5, kField, 4, 1, 8);
  CHECK(inv_np5.depth == 2);
  CHECK(inv_np5.cx == 3);
  CHECK(inv_np5.reg == 1);

  auto u33 = homology::invariants(os_gens(Matroid::uniform(3, 3)), 3, kField,
                                  4, 1, 8);
  CHECK(u33.depth == 3);
  CHECK(u33.cx == 0);
  CHECK(u33.reg == 0);
  CHECK(u33.d == 3);

  // loop case: zero quotient is flagged
  CHECK_THROWS_AS(
      homology::invariants(os_gens(Matroid::uniform(0, 2)), 2, kField, 4, 1, 8),
      std::domain_error);
}

TEST_CASE("linear projective resolutions") {
  auto lin = homology::has_linear_projective(os_gens(Matroid::uniform(2, 4)), 4,
                                             kField, 4, 1);
  CHECK(lin.linear);
  CHECK(lin.d == 2);

  auto second = Matroid::from_circuits(5, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}});
  auto notlin =
      homology::has_linear_projective(os_gens(second), 5, kField, 4, 1);
  CHECK(!notlin.linear);

  for (int t = 1; t <= 3; ++t) {
    auto mt = homology::has_linear_projective(
        groebner::monomial_generators(monomial::power_ideal(4, t), kField), 4,
        kField, 3, 1);
    CHECK(mt.linear);
    CHECK(mt.d == t);
  }

  CHECK_THROWS_AS(homology::has_linear_projective({}, 3, kField, 3, 1),
                  std::invalid_argument);
}

TEST_CASE("linear injective resolutions") {
  auto u23 = homology::has_linear_injective(os_gens(Matroid::uniform(2, 3)), 3,
                                            kField, 3, 1);
  CHECK(u23.linear);
  CHECK(u23.d == 2);

  auto second = Matroid::from_circuits(5, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}});
  auto inj = homology::has_linear_injective(os_gens(second), 5, kField, 3, 1);
  CHECK(inj.linear);
  CHECK(inj.d == 3);

  auto bad = homology::has_linear_injective(counterexample_gens(), 4, kField,
                                            3, 1);
  CHECK(!bad.linear);
}
