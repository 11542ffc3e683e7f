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

#ifndef OSFORGE_VERIFY_HPP
#define OSFORGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "osforge/field.hpp"
#include "osforge/monomial.hpp"

namespace osforge::verify {

struct RunConfig {
  la::Field field = la::Field::prime(la::kDefaultPrime);
  int imax = 4;
  std::uint64_t seed = 1;
  int trials = 8;
  exterior::MonomialOrder order = exterior::MonomialOrder::std_revlex;
};

enum class Status { pass, fail, genericity };

struct CheckResult {
  std::string law;       // identity being checked, see law_statement()
  std::string instance;  // corpus instance or case description
  Status status;
  std::string expected;
  std::string got;
};

// The mathematical statement a law tag verifies; every tag maps to exactly
// one statement.
std::string law_statement(const std::string& law);

// Individual check batteries. Each is deterministic for a fixed RunConfig.
std::vector<CheckResult> check_exactla(const RunConfig& cfg, int cases);
std::vector<CheckResult> check_exterior_axioms(const RunConfig& cfg, int cases);
std::vector<CheckResult> check_matroid_axioms(const RunConfig& cfg, int cases);
std::vector<CheckResult> check_hilbert(const RunConfig& cfg);
std::vector<CheckResult> check_hilbert_factorization(const RunConfig& cfg);
std::vector<CheckResult> check_uniform_invariants(const RunConfig& cfg);
std::vector<CheckResult> check_rank3_table(const RunConfig& cfg);
std::vector<CheckResult> check_betti_formulas(const RunConfig& cfg);
std::vector<CheckResult> check_linear_injective(const RunConfig& cfg);
std::vector<CheckResult> check_regularity(const RunConfig& cfg);
std::vector<CheckResult> check_gin(const RunConfig& cfg);
std::vector<CheckResult> check_duality(const RunConfig& cfg);
std::vector<CheckResult> check_classification(const RunConfig& cfg);

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs a named suite ("all" runs everything). Throws std::invalid_argument
// for unknown names.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const RunConfig& cfg);

struct Summary {
  int passed = 0;
  int failed = 0;
  int genericity = 0;
};

Summary summarize(const std::vector<CheckResult>& results);

}  // namespace osforge::verify

#endif  // OSFORGE_VERIFY_HPP
