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

#ifndef OSFORGE_CORPUS_HPP
#define OSFORGE_CORPUS_HPP

#include <string>
#include <vector>

#include "osforge/exterior.hpp"
#include "osforge/matroid.hpp"

namespace osforge::corpus {

struct Instance {
  std::string name;
  matroid::Matroid m;
};

// U(m,n) for 1 <= m <= n <= 6.
std::vector<Instance> uniform_family();

// Pairwise direct sums of the uniform family with total ground size <= max_n.
std::vector<Instance> uniform_direct_sums(int max_n);

// The two simple, connected, non-uniform rank-3 matroids on five elements:
// one 3-circuit with three 4-circuits, and two 3-circuits sharing an element
// with one 4-circuit avoiding it.
matroid::Matroid rank3_one_triple();
matroid::Matroid rank3_two_triples();

// Uniforms, direct sums and the two special rank-3 matroids, filtered to
// ground size <= max_n. All loopless. Names are canonical and sorted.
std::vector<Instance> loopless_corpus(int max_n);

// A few matroids with loops, for the degenerate paths.
std::vector<Instance> loop_corpus();

// The monomial ideal (e12, e13, e14, e234) in n = 4 whose quotient has
// (1+t) dividing the Hilbert series but depth 0.
std::vector<exterior::ExteriorElement> counterexample_ideal(
    const la::Field& field);

}  // namespace osforge::corpus

#endif  // OSFORGE_CORPUS_HPP
