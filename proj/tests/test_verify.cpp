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
#include "osforge/corpus.hpp"
#include "osforge/verify.hpp"

using namespace osforge;

TEST_CASE("corpus composition") {
  auto family = corpus::uniform_family();
  CHECK(family.size() == 21);
  for (const auto& inst : family) CHECK(!inst.m.has_loops());

  auto small = corpus::loopless_corpus(6);
  CHECK(small.size() == 61);  // 21 uniforms + 38 sums + 2 special rank-3
  for (const auto& inst : small) {
    CHECK(inst.m.n() <= 6);
    CHECK(!inst.m.has_loops());
  }
  auto big = corpus::loopless_corpus(8);
  CHECK(big.size() > small.size());
  // canonical order
  for (std::size_t i = 1; i < big.size(); ++i) {
    CHECK(big[i - 1].name < big[i].name);
  }
}

TEST_CASE("every produced law has a statement") {
  verify::RunConfig cfg;
  auto results = verify::run_suite("matroid", cfg);
  for (const auto& r : results) {
    CHECK(!verify::law_statement(r.law).empty());
  }
  auto more = verify::run_suite("duality", cfg);
  for (const auto& r : more) {
    CHECK(!verify::law_statement(r.law).empty());
  }
}

TEST_CASE("suites pass and are deterministic") {
  verify::RunConfig cfg;
  for (const char* name : {"exactla", "exterior", "hilbert"}) {
    auto first = verify::run_suite(name, cfg);
    auto summary = verify::summarize(first);
    CHECK(summary.failed == 0);
    CHECK(summary.genericity == 0);
    CHECK(summary.passed > 0);
    auto second = verify::run_suite(name, cfg);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].law == second[i].law);
      CHECK(first[i].instance == second[i].instance);
      CHECK((first[i].status == second[i].status));
    }
  }
  CHECK_THROWS_AS(verify::run_suite("no-such-suite", cfg),
                  std::invalid_argument);
}

TEST_CASE("suite list") {
  CHECK(verify::is_suite("all"));
  CHECK(verify::is_suite("gin"));
  CHECK(!verify::is_suite("bogus"));
}
