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

#include "doctest.h"
#include "osforge/cartan.hpp"
#include "osforge/invariants.hpp"
#include "osforge/module.hpp"
#include "osforge/monomial_ideal.hpp"
#include "osforge/os_algebra.hpp"

using namespace osforge;
using exterior::ExteriorElement;
using homology::GradedModuleRep;
using la::Field;
using matroid::Matroid;

namespace {

const Field kField = Field::prime(la::kDefaultPrime);

std::vector<ExteriorElement> os_gens(const Matroid& m) {
  return osalg::os_ideal(m, kField).generators;
}

std::vector<ExteriorElement> monomial_gens(const monomial::MonomialIdeal& j) {
  std::vector<ExteriorElement> out;
  for (exterior::Monomial u : j.generators()) {
    out.push_back(ExteriorElement::term(j.n(), kField, u, kField.one()));
  }
  return out;
}

std::vector<ExteriorElement> maximal_ideal_gens(int n) {
  std::vector<ExteriorElement> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(ExteriorElement::variable(n, kField, i));
  }
  return out;
}

std::vector<int> dims_of(const GradedModuleRep& m) {
  std::vector<int> out;
  for (int d = 0; d <= m.max_degree(); ++d) out.push_back(m.dim(d));
  return out;
}

}  // namespace

TEST_CASE("module_from_quotient dimensions") {
  auto os23 = homology::module_from_quotient(
      os_gens(Matroid::uniform(2, 3)), 3, kField);
  CHECK(dims_of(os23) == std::vector<int>{1, 3, 2, 0});
  os23.validate();

  auto residue = homology::module_from_quotient(maximal_ideal_gens(3), 3, kField);
  CHECK(dims_of(residue) == std::vector<int>{1, 0, 0, 0});

  auto free = homology::module_from_quotient({}, 3, kField);
  CHECK(dims_of(free) == std::vector<int>{1, 3, 3, 1});
  free.validate();

  CHECK_THROWS_AS(
      homology::module_from_quotient(
          {exterior::parse_element(3, kField, "e[1]+e[1,2]")}, 3, kField),
      std::invalid_argument);
}

TEST_CASE("module_from_ideal dimensions") {
  auto principal = homology::module_from_ideal(
      {exterior::parse_element(2, kField, "-e[1]+e[2]")}, 2, kField);
  CHECK(dims_of(principal) == std::vector<int>{0, 1, 1});
  principal.validate();

  auto max_ideal = homology::module_from_ideal(maximal_ideal_gens(2), 2, kField);
  CHECK(dims_of(max_ideal) == std::vector<int>{0, 2, 1});

  auto zero = homology::module_from_ideal({}, 2, kField);
  CHECK(zero.is_zero());
}

TEST_CASE("annihilator of the OS ideal of U_{2,3}") {
  auto ann = homology::annihilator(os_gens(Matroid::uniform(2, 3)), 3, kField);
  REQUIRE(ann.size() == 2);
  for (const auto& g : ann) CHECK(g.degree() == 1);

  auto basis1 = exterior::graded_basis(3, 1, exterior::MonomialOrder::std_revlex);
  la::SparseMatrix got(kField, 2, 3);
  got.set_row(0, ann[0].coords(basis1));
  got.set_row(1, ann[1].coords(basis1));
  la::SparseMatrix want(kField, 2, 3);
  want.set_row(0, exterior::parse_element(3, kField, "e[1]-e[2]").coords(basis1));
  want.set_row(1, exterior::parse_element(3, kField, "e[2]-e[3]").coords(basis1));
  CHECK(la::same_rowspace(got, want));
}

TEST_CASE("annihilator of powers of the maximal ideal") {
  for (int n = 2; n <= 4; ++n) {
    for (int t = 1; t <= n; ++t) {
      auto ann = homology::annihilator(
          monomial_gens(monomial::power_ideal(n, t)), n, kField);
      auto expected = monomial::power_ideal(n, n - t + 1);
      REQUIRE(ann.size() == expected.generators().size());
      for (std::size_t k = 0; k < ann.size(); ++k) {
        CHECK(ann[k].terms().size() == 1);
        CHECK(ann[k].terms().begin()->first == expected.generators()[k]);
      }
    }
  }
}

TEST_CASE("annihilator agrees with the combinatorial route on monomial ideals") {
  auto j = monomial::MonomialIdeal::make(
      3, {exterior::monomial_from_indices(3, {1, 2}),
          exterior::monomial_from_indices(3, {1, 3})});
  auto ann = homology::annihilator(monomial_gens(j), 3, kField);
  auto expected = monomial::annihilator_monomial(j);
  REQUIRE(ann.size() == expected.generators().size());
  for (std::size_t k = 0; k < ann.size(); ++k) {
    CHECK(ann[k].terms().size() == 1);
    CHECK(ann[k].terms().begin()->first == expected.generators()[k]);
  }
  // annihilator of the zero ideal is the unit ideal
  auto ann_zero = homology::annihilator({}, 3, kField);
  REQUIRE(ann_zero.size() == 1);
  CHECK(ann_zero[0].equals(ExteriorElement::unit(3, kField)));
}

TEST_CASE("cartan homology of the full sequence on E resolves K") {
  for (int n = 2; n <= 4; ++n) {
    auto e = homology::module_from_quotient({}, n, kField);
    auto h = homology::cartan_homology(
        homology::canonical_sequence(n, kField), e, 3);
    CHECK(h[0].by_degree == std::map<int, int>{{0, 1}});
    for (int i = 1; i <= 3; ++i) CHECK(h[i].all_zero());
  }
}

TEST_CASE("cartan homology vanishes for a regular element") {
  auto os23 = homology::module_from_quotient(
      os_gens(Matroid::uniform(2, 3)), 3, kField);
  std::vector<std::vector<la::Scalar>> e1 = {
      {kField.one(), kField.zero(), kField.zero()}};
  auto h = homology::cartan_homology(e1, os23, 3);
  for (int i = 1; i <= 3; ++i) CHECK(h[i].all_zero());
  CHECK(!h[0].all_zero());  // the quotient E/(J + e1) is nonzero
}

TEST_CASE("betti of the residue field") {
  for (int n = 2; n <= 4; ++n) {
    auto k = homology::module_from_quotient(maximal_ideal_gens(n), n, kField);
    auto betti = homology::betti_table(k, 4);
    for (int i = 0; i <= 4; ++i) {
      CHECK(betti.at(i, i) == exterior::binomial(n + i - 1, i));
      CHECK(betti.total(i) == exterior::binomial(n + i - 1, i));
    }
  }
}

TEST_CASE("betti of the OS ideal of U_{2,3}") {
  auto j = homology::module_from_ideal(os_gens(Matroid::uniform(2, 3)), 3, kField);
  auto betti = homology::betti_table(j, 4);
  for (int i = 0; i <= 4; ++i) {
    CHECK(betti.at(i, i + 2) == i + 1);
    CHECK(betti.total(i) == i + 1);
  }
}

TEST_CASE("betti of powers of the maximal ideal") {
  for (int n = 2; n <= 4; ++n) {
    for (int t = 1; t <= n; ++t) {
      auto mt = homology::module_from_ideal(
          monomial_gens(monomial::power_ideal(n, t)), n, kField);
      auto betti = homology::betti_table(mt, 3);
      for (int i = 0; i <= 3; ++i) {
        CHECK(betti.total(i) == monomial::power_betti(n, t, i));
        CHECK(betti.at(i, i + t) == betti.total(i));  // t-linear resolution
      }
    }
  }
}

TEST_CASE("bass table of E/J(U_{2,3})") {
  auto gens = os_gens(Matroid::uniform(2, 3));
  auto bass = homology::bass_table(gens, 3, kField, 3);
  for (int i = 0; i <= 3; ++i) {
    CHECK(bass.at(i, 2 - i) == i + 2);
    CHECK(bass.total(i) == i + 2);
  }
  // cocomplex route agrees
  auto mod = homology::module_from_quotient(gens, 3, kField);
  CHECK(homology::bass_table_cocomplex(mod, 3) == bass);
}

TEST_CASE("bass table of E itself") {
  for (int n = 2; n <= 4; ++n) {
    auto bass = homology::bass_table({}, n, kField, 3);
    CHECK(bass.entries.size() == 1);
    CHECK(bass.at(0, n) == 1);
    auto e = homology::module_from_quotient({}, n, kField);
    CHECK(homology::bass_table_cocomplex(e, 3) == bass);
  }
}

TEST_CASE("bass/betti duality for a monomial ideal") {
  auto j = monomial::MonomialIdeal::make(
      3, {exterior::monomial_from_indices(3, {1, 2}),
          exterior::monomial_from_indices(3, {1, 3})});
  auto bass = homology::bass_table(monomial_gens(j), 3, kField, 3);
  auto dual = homology::betti_table(
      homology::module_from_ideal(
          monomial_gens(monomial::annihilator_monomial(j)), 3, kField),
      3);
  for (const auto& [key, v] : bass.entries) {
    CHECK(dual.at(key.first, 3 - key.second) == v);
  }
}

TEST_CASE("quotient by a linear form") {
  // E (n=3) modulo e1 is the exterior algebra on two generators
  auto e = homology::module_from_quotient({}, 3, kField);
  std::vector<la::Scalar> v = {kField.one(), kField.zero(), kField.zero()};
  auto q = homology::quotient_by_linear_form(e, v);
  CHECK(q.n() == 2);
  CHECK(dims_of(q) == std::vector<int>{1, 2, 1, 0});
  q.validate();

  // E/J(U_{2,3}) modulo e1: Hilbert series drops by a (1+t) factor
  auto os23 = homology::module_from_quotient(
      os_gens(Matroid::uniform(2, 3)), 3, kField);
  auto q2 = homology::quotient_by_linear_form(
      os23, {kField.one(), kField.zero(), kField.zero()});
  CHECK(q2.hilbert() * poly::ZPoly({1, 1}) == os23.hilbert());
  q2.validate();
}

TEST_CASE("cartan differentials compose to zero") {
  std::mt19937_64 rng(29);
  auto gens = os_gens(Matroid::from_circuits(
      5, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}}));
  auto m = homology::module_from_quotient(gens, 5, kField);
  std::vector<std::vector<la::Scalar>> v;
  for (int k = 0; k < 3; ++k) {
    std::vector<la::Scalar> coords(5, kField.zero());
    for (auto& c : coords) c = kField.random(rng);
    v.push_back(std::move(coords));
  }
  for (int i = 1; i <= 3; ++i) {
    for (int t = i + 1; t <= i + 5; ++t) {
      auto outer = homology::cartan_differential(v, m, i, t);
      auto inner = homology::cartan_differential(v, m, i + 1, t);
      if (outer.cols() == 0 || inner.rows() == 0) continue;
      CHECK(outer.multiply(inner).is_zero());
    }
  }
}

TEST_CASE("regularity agrees with vanishing Cartan homology") {
  std::mt19937_64 rng(23);
  std::vector<Matroid> zoo = {
      Matroid::uniform(2, 4), Matroid::uniform(3, 4),
      Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1)),
      Matroid::from_circuits(5, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}})};
  int done = 0;
  while (done < 40) {
    const Matroid& m = zoo[rng() % zoo.size()];
    auto mod = homology::module_from_quotient(os_gens(m), m.n(), kField);
    std::vector<la::Scalar> v(m.n(), kField.zero());
    bool nonzero = false;
    for (auto& c : v) {
      c = kField.random(rng);
      nonzero = nonzero || !kField.is_zero(c);
    }
    if (!nonzero) continue;
    auto h = homology::cartan_homology({v}, mod, 2);
    bool vanishes = h[1].all_zero() && h[2].all_zero();
    CHECK(homology::is_regular_element(v, mod) == vanishes);
    ++done;
  }
}

TEST_CASE("co and hom duality of graded dimensions") {
  // H_i(v; M)_d has the dimension of H^i(v; M*)_{n-d}
  auto gens = os_gens(Matroid::uniform(2, 4));
  int n = 4;
  auto m = homology::module_from_quotient(gens, n, kField);
  auto dual = homology::module_from_ideal(
      homology::annihilator(gens, n, kField), n, kField);
  std::vector<std::vector<la::Scalar>> v = {
      {kField.one(), kField.one(), kField.zero(), kField.zero()},
      {kField.zero(), kField.one(), kField.from_int(2), kField.zero()}};
  auto hom = homology::cartan_homology(v, m, 2);
  auto coh = homology::cartan_cohomology(v, dual, 2);
  for (int i = 0; i <= 2; ++i) {
    for (int d = 0; d <= n + i; ++d) {
      CHECK(hom[i].at(d) == coh[i].at(n - d));
    }
  }
}
