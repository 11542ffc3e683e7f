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
#include "osforge/classify.hpp"
#include "osforge/invariants.hpp"
#include "osforge/os_algebra.hpp"

using namespace osforge;
using classify::LinearClassKind;
using classify::Rank3Profile;
using la::Field;
using matroid::Matroid;

namespace {

const Field kField = Field::prime(la::kDefaultPrime);

Matroid first_rank3() {
  return Matroid::from_circuits(
      5, {{1, 2, 3}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
}
Matroid second_rank3() {
  return Matroid::from_circuits(5, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}});
}

}  // namespace

TEST_CASE("linear resolution classes") {
  auto loop = classify::classify_linear_resolution(
      Matroid::direct_sum(Matroid::uniform(0, 1), Matroid::uniform(1, 1)));
  CHECK(loop.kind == LinearClassKind::loop_case);
  CHECK(loop.m == 0);

  auto sums = classify::classify_linear_resolution(
      Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 3)));
  CHECK(sums.kind == LinearClassKind::parallel_sums);
  CHECK(sums.m == 1);
  CHECK(sums.f == 0);
  CHECK(sums.parts == std::vector<int>{2, 3});

  auto sums_with_coloop = classify::classify_linear_resolution(
      Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 1)));
  CHECK(sums_with_coloop.kind == LinearClassKind::parallel_sums);
  CHECK(sums_with_coloop.f == 1);
  CHECK(sums_with_coloop.parts == std::vector<int>{2});

  auto uniform = classify::classify_linear_resolution(Matroid::uniform(2, 4));
  CHECK(uniform.kind == LinearClassKind::uniform_plus_coloops);
  CHECK(uniform.m == 2);
  CHECK(uniform.f == 0);

  auto near_pencil = classify::classify_linear_resolution(
      Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1)));
  CHECK(near_pencil.kind == LinearClassKind::uniform_plus_coloops);
  CHECK(near_pencil.m == 2);
  CHECK(near_pencil.f == 1);

  CHECK(classify::classify_linear_resolution(second_rank3()).kind ==
        LinearClassKind::not_linear);
  CHECK(classify::classify_linear_resolution(first_rank3()).kind ==
        LinearClassKind::not_linear);

  // a sum mixing a rank-1 class with a bigger uniform is not linear
  CHECK(classify::classify_linear_resolution(
            Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3)))
            .kind == LinearClassKind::not_linear);

  // free matroid: all coloops
  auto free = classify::classify_linear_resolution(Matroid::uniform(4, 4));
  CHECK(free.kind == LinearClassKind::uniform_plus_coloops);
  CHECK(free.f == 4);
}

TEST_CASE("predicted total Betti numbers") {
  for (int i = 0; i <= 2; ++i) {
    CHECK(classify::predicted_betti(Matroid::uniform(2, 4), i) ==
          std::vector<long long>{3, 8, 15}[i]);
  }
  auto two_pairs =
      Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2));
  for (int i = 0; i <= 2; ++i) {
    CHECK(classify::predicted_betti(two_pairs, i) ==
          std::vector<long long>{2, 3, 4}[i]);
  }
  for (int i = 0; i <= 4; ++i) {
    CHECK(classify::predicted_betti(Matroid::uniform(2, 3), i) == i + 1);
  }
  CHECK(!classify::predicted_betti(second_rank3(), 0).has_value());
}

TEST_CASE("predicted betti matches the homology engine") {
  std::vector<Matroid> zoo = {
      Matroid::uniform(2, 3),
      Matroid::uniform(2, 4),
      Matroid::uniform(3, 4),
      Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2)),
      Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1)),
      Matroid::direct_sum(Matroid::uniform(1, 3), Matroid::uniform(1, 1)),
  };
  for (const Matroid& m : zoo) {
    auto gens = osalg::os_ideal(m, kField).generators;
    auto betti = homology::betti_table(
        homology::module_from_ideal(gens, m.n(), kField), 3);
    for (int i = 0; i <= 3; ++i) {
      auto predicted = classify::predicted_betti(m, i);
      REQUIRE(predicted.has_value());
      CHECK(betti.total(i) == *predicted);
    }
  }
}

TEST_CASE("predicted invariants") {
  auto u25 = classify::predicted_invariants(Matroid::uniform(2, 5));
  CHECK(u25.depth == 1);
  CHECK(u25.cx == 4);
  CHECK(u25.reg == 1);
  CHECK(u25.d == 2);

  auto np4 = classify::predicted_invariants(
      Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1)));
  CHECK(np4.depth == 2);
  CHECK(np4.cx == 2);
  CHECK(np4.reg == 1);
  CHECK(np4.d == 3);

  auto u33 = classify::predicted_invariants(Matroid::uniform(3, 3));
  CHECK(u33.depth == 3);
  CHECK(u33.cx == 0);
  CHECK(u33.reg == 0);
  CHECK(u33.d == 3);

  CHECK_THROWS_AS(classify::predicted_invariants(Matroid::uniform(0, 2)),
                  std::invalid_argument);
}

TEST_CASE("rank-3 profiles") {
  CHECK(classify::rank3_profile(Matroid::uniform(2, 5)) == Rank3Profile::pencil);
  CHECK(classify::rank3_profile(Matroid::direct_sum(
            Matroid::uniform(2, 3), Matroid::uniform(1, 1))) ==
        Rank3Profile::near_pencil);
  CHECK(classify::rank3_profile(Matroid::uniform(3, 3)) ==
        Rank3Profile::near_pencil);
  CHECK(classify::rank3_profile(first_rank3()) ==
        Rank3Profile::other_simple_rank3);
  CHECK(first_rank3().is_connected());
  CHECK(classify::rank3_profile(second_rank3()) ==
        Rank3Profile::other_simple_rank3);
  CHECK(classify::rank3_profile(Matroid::uniform(1, 3)) ==
        Rank3Profile::not_applicable);
  CHECK(classify::rank3_profile(Matroid::uniform(3, 6)) ==
        Rank3Profile::other_simple_rank3);
}
