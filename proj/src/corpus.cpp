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

#include "osforge/corpus.hpp"

#include <algorithm>

namespace osforge::corpus {

using matroid::Matroid;

std::vector<Instance> uniform_family() {
  std::vector<Instance> out;
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= n; ++m) {
      out.push_back({"U(" + std::to_string(m) + "," + std::to_string(n) + ")",
                     Matroid::uniform(m, n)});
    }
  }
  return out;
}

std::vector<Instance> uniform_direct_sums(int max_n) {
  std::vector<Instance> family = uniform_family();
  std::vector<Instance> out;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a; b < family.size(); ++b) {
      if (family[a].m.n() + family[b].m.n() > max_n) continue;
      out.push_back({family[a].name + "+" + family[b].name,
                     Matroid::direct_sum(family[a].m, family[b].m)});
    }
  }
  return out;
}

Matroid rank3_one_triple() {
  return Matroid::from_circuits(
      5, {{1, 2, 3}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
}

Matroid rank3_two_triples() {
  return Matroid::from_circuits(5, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}});
}

std::vector<Instance> loopless_corpus(int max_n) {
  std::vector<Instance> out;
  for (auto& inst : uniform_family()) {
    if (inst.m.n() <= max_n) out.push_back(std::move(inst));
  }
  for (auto& inst : uniform_direct_sums(std::min(max_n, 8))) {
    out.push_back(std::move(inst));
  }
  if (max_n >= 5) {
    out.push_back({"rank3-one-triple(5)", rank3_one_triple()});
    out.push_back({"rank3-two-triples(5)", rank3_two_triples()});
  }
  std::sort(out.begin(), out.end(),
            [](const Instance& x, const Instance& y) { return x.name < y.name; });
  return out;
}

std::vector<Instance> loop_corpus() {
  std::vector<Instance> out;
  out.push_back({"U(0,1)", Matroid::uniform(0, 1)});
  out.push_back({"U(0,2)", Matroid::uniform(0, 2)});
  out.push_back({"U(0,1)+U(1,1)",
                 Matroid::direct_sum(Matroid::uniform(0, 1), Matroid::uniform(1, 1))});
  out.push_back({"U(0,1)+U(2,3)",
                 Matroid::direct_sum(Matroid::uniform(0, 1), Matroid::uniform(2, 3))});
  return out;
}

std::vector<exterior::ExteriorElement> counterexample_ideal(
    const la::Field& field) {
  int n = 4;
  auto term = [&](std::initializer_list<int> idx) {
    return exterior::ExteriorElement::term(
        n, field, exterior::monomial_from_indices(n, idx), field.one());
  };
  return {term({1, 2}), term({1, 3}), term({1, 4}), term({2, 3, 4})};
}

}  // namespace osforge::corpus
