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

// End-to-end acceptance suite: one criterion per line, every tolerance
// exact, wall-clock budgets enforced where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "osforge/verify.hpp"

using osforge::verify::CheckResult;
using osforge::verify::RunConfig;
using osforge::verify::Status;

namespace {

struct Criterion {
  int number;
  std::string description;
  double time_budget_s;  // 0 = no budget
  std::function<std::vector<CheckResult>(const RunConfig&)> run;
};

struct Outcome {
  bool pass = true;
  bool genericity = false;
  int checks = 0;
  double elapsed = 0;
  std::vector<std::string> failures;
};

Outcome run_criterion(const Criterion& c, const RunConfig& cfg) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> results = c.run(cfg);
  auto t1 = std::chrono::steady_clock::now();
  out.elapsed = std::chrono::duration<double>(t1 - t0).count();
  out.checks = static_cast<int>(results.size());
  for (const auto& r : results) {
    if (r.status == Status::fail) {
      out.pass = false;
      out.failures.push_back("[" + r.law + "] " + r.instance + ": expected " +
                             r.expected + ", got " + r.got);
    } else if (r.status == Status::genericity) {
      out.genericity = true;
      out.failures.push_back("[" + r.law + "] " + r.instance +
                             ": genericity failure: " + r.got);
    }
  }
  if (c.time_budget_s > 0 && out.elapsed > c.time_budget_s) {
    out.pass = false;
    out.failures.push_back("time budget exceeded: " +
                           std::to_string(out.elapsed) + "s > " +
                           std::to_string(c.time_budget_s) + "s");
  }
  return out;
}

}  // namespace

int main() {
  using namespace osforge::verify;
  RunConfig cfg;  // GF(32003), imax 4, seed 1, trials 8

  std::vector<Criterion> criteria = {
      {1,
       "uniform invariants: (depth, cx, reg, d) of E/J(U(m,n)) for "
       "1 <= m <= n <= 6",
       60.0, [](const RunConfig& c) { return check_uniform_invariants(c); }},
      {2,
       "rank-3 table: (depth, cx, reg) for the three rank-3 classes, "
       "n = 4..6",
       60.0, [](const RunConfig& c) { return check_rank3_table(c); }},
      {3,
       "Betti formulas: closed-form totals for the linear classes and the "
       "powers of the maximal ideal, i <= 4",
       300.0, [](const RunConfig& c) { return check_betti_formulas(c); }},
      {4,
       "linear injective resolutions: Bass tables concentrated on the "
       "d = r(M) diagonal, i <= 3",
       0.0, [](const RunConfig& c) { return check_linear_injective(c); }},
      {5,
       "Hilbert factorization: H = (1+t)^k Q with Q(-1) != 0, k = "
       "#components; counterexample keeps depth 0",
       0.0, [](const RunConfig& c) { return check_hilbert_factorization(c); }},
      {6,
       "ini/gin suite at seeds 1..3: broken-circuit initial ideal, strong "
       "stability, monotonicity, transfer, Hilbert preservation",
       0.0,
       [](const RunConfig& c) {
         std::vector<CheckResult> all;
         for (std::uint64_t seed = 1; seed <= 3; ++seed) {
           RunConfig cs = c;
           cs.seed = seed;
           auto part = check_gin(cs);
           for (auto& r : part) {
             r.instance += " [seed " + std::to_string(seed) + "]";
           }
           all.insert(all.end(), part.begin(), part.end());
         }
         return all;
       }},
      {7,
       "classification soundness: structural classes match the truncated "
       "Betti tables, i <= 4",
       0.0, [](const RunConfig& c) { return check_classification(c); }},
      {8,
       "duality: dim (0:J)_i = dim (E/J)_{n-i}, depth E/J = depth (0:J), "
       "double annihilator",
       0.0, [](const RunConfig& c) { return check_duality(c); }},
      {9,
       "property suites: exterior algebra axioms, matroid axioms, nbc "
       "bridge; 1000 randomized cases each, fixed seed",
       0.0,
       [](const RunConfig& c) {
         std::vector<CheckResult> all = check_exactla(c, 1000);
         auto ext = check_exterior_axioms(c, 1000);
         all.insert(all.end(), ext.begin(), ext.end());
         auto mat = check_matroid_axioms(c, 1000);
         all.insert(all.end(), mat.begin(), mat.end());
         auto hil = check_hilbert(c);
         all.insert(all.end(), hil.begin(), hil.end());
         return all;
       }},
  };

  int failed = 0;
  bool genericity = false;
  for (const auto& c : criteria) {
    Outcome out = run_criterion(c, cfg);
    const char* verdict = out.pass && !out.genericity ? "PASS"
                          : out.genericity            ? "GENERICITY"
                                                      : "FAIL";
    std::printf("CRITERION %d %s (%.1fs, %d checks): %s\n", c.number, verdict,
                out.elapsed, out.checks, c.description.c_str());
    for (const auto& f : out.failures) {
      std::printf("    %s\n", f.c_str());
    }
    if (!out.pass) ++failed;
    if (out.genericity) genericity = true;
  }
  if (failed > 0) return 1;
  if (genericity) return 3;
  return 0;
}
