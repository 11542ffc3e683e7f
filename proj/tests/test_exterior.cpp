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
#include "osforge/exterior.hpp"
#include "osforge/poly.hpp"

using namespace osforge;
using exterior::ExteriorElement;
using exterior::Monomial;
using exterior::MonomialOrder;
using la::Field;

namespace {

ExteriorElement mono(int n, const Field& f, std::initializer_list<int> idx,
                     long long c = 1) {
  return ExteriorElement::term(n, f, exterior::monomial_from_indices(n, idx),
                               f.from_int(c));
}

ExteriorElement random_homogeneous(int n, int d, const Field& f,
                                   std::mt19937_64& rng) {
  ExteriorElement out = ExteriorElement::zero(n, f);
  for (Monomial u : exterior::graded_basis(n, d, MonomialOrder::std_revlex)) {
    out = out + ExteriorElement::term(n, f, u, f.random(rng));
  }
  return out;
}

using Mat = std::vector<std::vector<la::Scalar>>;

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat out(n, std::vector<la::Scalar>(n, f.zero()));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("wedge signs") {
  Field f = Field::prime(la::kDefaultPrime);
  int n = 3;
  CHECK(exterior::wedge(mono(n, f, {2}), mono(n, f, {1}))
            .equals(mono(n, f, {1, 2}, -1)));
  CHECK(exterior::wedge(mono(n, f, {1, 3}), mono(n, f, {2}))
            .equals(mono(n, f, {1, 2, 3}, -1)));
  auto v = mono(n, f, {1}) + mono(n, f, {2});
  CHECK(exterior::wedge(v, v).is_zero());
  CHECK(exterior::wedge(mono(n, f, {1}), mono(n, f, {1, 2})).is_zero());
}

TEST_CASE("boundary on monomials") {
  Field f = Field::prime(la::kDefaultPrime);
  int n = 3;
  auto d12 = exterior::boundary(mono(n, f, {1, 2}));
  CHECK(d12.equals(mono(n, f, {2}) - mono(n, f, {1})));

  auto d123 = exterior::boundary(mono(n, f, {1, 2, 3}));
  auto expected = mono(n, f, {2, 3}) - mono(n, f, {1, 3}) + mono(n, f, {1, 2});
  CHECK(d123.equals(expected));

  // product form (e2-e1)(e3-e1)
  auto prod = exterior::wedge(mono(n, f, {2}) - mono(n, f, {1}),
                              mono(n, f, {3}) - mono(n, f, {1}));
  CHECK(d123.equals(prod));

  CHECK(exterior::boundary(mono(n, f, {1})).equals(ExteriorElement::unit(n, f)));
}

TEST_CASE("substitute") {
  Field f = Field::prime(la::kDefaultPrime);
  int n = 3;
  Mat id(n, std::vector<la::Scalar>(n, f.zero()));
  for (int i = 0; i < n; ++i) id[i][i] = f.one();
  auto e1 = mono(n, f, {1});
  CHECK(exterior::substitute(e1, id).equals(e1));

  Mat swap12 = id;
  std::swap(swap12[0], swap12[1]);
  CHECK(exterior::substitute(mono(n, f, {1, 2}), swap12)
            .equals(mono(n, f, {1, 2}, -1)));

  Mat shear = id;
  shear[0][1] = f.one();  // e1 -> e1 + e2
  CHECK(exterior::substitute(mono(n, f, {1, 2}), shear)
            .equals(mono(n, f, {1, 2})));

  Mat singular = id;
  singular[2] = singular[0];
  CHECK_THROWS_AS(exterior::substitute(e1, singular), std::invalid_argument);
}

TEST_CASE("substitute composition law") {
  Field f = Field::prime(la::kDefaultPrime);
  int n = 4;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Mat g = exterior::random_invertible_matrix(n, f, rng);
    Mat h = exterior::random_invertible_matrix(n, f, rng);
    ExteriorElement a =
        random_homogeneous(n, 2, f, rng) + random_homogeneous(n, 1, f, rng);
    auto lhs = exterior::substitute(exterior::substitute(a, g), h);
    auto rhs = exterior::substitute(a, mat_mul(f, g, h));
    CHECK(lhs.equals(rhs));
  }
}

TEST_CASE("graded basis sizes and orders") {
  using exterior::graded_basis;
  CHECK(graded_basis(3, 0, MonomialOrder::std_revlex) ==
        std::vector<Monomial>{exterior::kOne});
  CHECK(graded_basis(3, 2, MonomialOrder::std_revlex).size() == 3);
  CHECK(graded_basis(4, 2, MonomialOrder::std_revlex).size() == 6);
  CHECK_THROWS_AS(graded_basis(3, 4, MonomialOrder::std_revlex),
                  std::invalid_argument);

  // std_revlex on degree 2, n=3: e12 > e13 > e23; rev_compat reverses.
  auto std_order = graded_basis(3, 2, MonomialOrder::std_revlex);
  CHECK(std_order[0] == exterior::monomial_from_indices(3, {1, 2}));
  CHECK(std_order[2] == exterior::monomial_from_indices(3, {2, 3}));
  auto rev_order = graded_basis(3, 2, MonomialOrder::rev_compat);
  CHECK(rev_order[0] == exterior::monomial_from_indices(3, {2, 3}));
  CHECK(rev_order[2] == exterior::monomial_from_indices(3, {1, 2}));
}

TEST_CASE("monomial order is total and multiplicative") {
  for (MonomialOrder ord :
       {MonomialOrder::std_revlex, MonomialOrder::rev_compat}) {
    int n = 6;
    for (int d = 1; d < n; ++d) {
      auto basis = exterior::graded_basis(n, d, ord);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
          CHECK(exterior::monomial_greater(basis[i], basis[j], ord));
          CHECK(!exterior::monomial_greater(basis[j], basis[i], ord));
          // multiplicativity: u > v implies uw > vw when both nonzero
          for (Monomial w :
               exterior::graded_basis(n, 1, MonomialOrder::std_revlex)) {
            if ((w & basis[i]) || (w & basis[j])) continue;
            CHECK(exterior::monomial_greater(basis[i] | w, basis[j] | w, ord));
          }
        }
      }
    }
  }
}

TEST_CASE("randomized exterior algebra axioms") {
  for (const Field& f : {Field::prime(la::kDefaultPrime), Field::rationals()}) {
    std::mt19937_64 rng(2026);
    int n = 5;
    for (int trial = 0; trial < 60; ++trial) {
      int da = static_cast<int>(rng() % (n + 1));
      int db = static_cast<int>(rng() % (n + 1));
      auto a = random_homogeneous(n, da, f, rng);
      auto b = random_homogeneous(n, db, f, rng);

      // graded anticommutativity
      auto ab = exterior::wedge(a, b);
      auto ba = exterior::wedge(b, a);
      if ((da * db) % 2 == 1) ba = ba.negated();
      CHECK(ab.equals(ba));

      // boundary of boundary vanishes
      CHECK(exterior::boundary(exterior::boundary(a)).is_zero());

      // Leibniz rule
      auto lhs = exterior::boundary(ab);
      auto rhs = exterior::wedge(exterior::boundary(a), b);
      auto second = exterior::wedge(a, exterior::boundary(b));
      if (da % 2 == 1) second = second.negated();
      CHECK(lhs.equals(rhs + second));
    }
  }
}

TEST_CASE("dimension of graded pieces and Hilbert series of E") {
  int n = 6;
  poly::ZPoly hilbert;
  std::vector<long long> dims;
  for (int d = 0; d <= n; ++d) {
    auto basis = exterior::graded_basis(n, d, MonomialOrder::std_revlex);
    CHECK(static_cast<long long>(basis.size()) == exterior::binomial(n, d));
    dims.push_back(static_cast<long long>(basis.size()));
  }
  CHECK(poly::ZPoly(dims) == poly::ZPoly::one_plus_t_power(n));
}

TEST_CASE("text rendering and parsing") {
  Field f = Field::prime(la::kDefaultPrime);
  int n = 4;
  auto d123 = exterior::boundary(mono(n, f, {1, 2, 3}));
  CHECK(d123.str() == "e[1,2]-e[1,3]+e[2,3]");
  CHECK(exterior::parse_element(n, f, "e[1,2]-e[1,3]+e[2,3]").equals(d123));
  CHECK(exterior::parse_element(n, f, " 2 e[1] + 3*e[2,4] - 1 ")
            .equals(mono(n, f, {1}, 2) + mono(n, f, {2, 4}, 3) -
                    ExteriorElement::unit(n, f)));

  Field fq = Field::rationals();
  auto half = exterior::parse_element(n, fq, "1/2e[3]-5");
  CHECK(half.str() == "-5+1/2e[3]");
  CHECK(exterior::parse_element(n, fq, half.str()).equals(half));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_homogeneous(n, static_cast<int>(rng() % (n + 1)), fq, rng);
    CHECK(exterior::parse_element(n, fq, a.str()).equals(a));
    // balanced rendering over GF(p) round-trips too
    auto b = random_homogeneous(n, static_cast<int>(rng() % (n + 1)), f, rng);
    CHECK(exterior::parse_element(n, f, b.str()).equals(b));
  }
  CHECK_THROWS_AS(exterior::parse_element(n, f, "e[1,9]"),
                  std::invalid_argument);
  CHECK_THROWS_AS(exterior::parse_element(n, f, "e[1 e[2]"),
                  std::invalid_argument);
}

TEST_CASE("context mismatch is rejected") {
  Field fp = Field::prime(la::kDefaultPrime);
  Field fq = Field::rationals();
  auto a = mono(3, fp, {1});
  auto b = mono(3, fq, {2});
  auto c = mono(4, fp, {2});
  CHECK_THROWS_AS(exterior::wedge(a, b), std::invalid_argument);
  CHECK_THROWS_AS(exterior::wedge(a, c), std::invalid_argument);
}
