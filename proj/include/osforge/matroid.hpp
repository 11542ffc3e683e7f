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

#ifndef OSFORGE_MATROID_HPP
#define OSFORGE_MATROID_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "osforge/poly.hpp"

namespace osforge::matroid {

// Subset of the ground set [n]; bit k-1 set iff element k is in the set.
using SetMask = std::uint32_t;

inline constexpr int kMaxGround = 24;
// Full subset enumeration (flats, nbc sets, beta) is enforced up to here.
inline constexpr int kEnumLimit = 20;

std::vector<int> set_elements(SetMask s);  // ascending, 1-based
SetMask set_from_elements(int n, const std::vector<int>& elements);
std::string set_str(SetMask s);  // "{1,2,3}"

class MatroidError : public std::runtime_error {
 public:
  explicit MatroidError(const std::string& what) : std::runtime_error(what) {}
};

struct Flat {
  SetMask elements;
  int rank;
};

// Lattice of flats, ordered by inclusion; flats are listed by (rank, mask).
struct FlatsLattice {
  int n;
  std::vector<Flat> flats;
  int bottom() const;  // index of cl(empty set)
  int top() const;     // index of cl([n])
  int index_of(SetMask s) const;  // -1 if not a flat
};

struct ElementClassification {
  std::vector<int> loops;
  std::vector<std::vector<int>> parallel_classes;  // nontrivial only
  std::vector<int> coloops;
  bool is_simple;
};

// Abstract matroid on [n] stored by its set of circuits (minimal dependent
// sets). Validation enforces the circuit axioms: no empty circuit, the
// antichain property, and circuit elimination; violations are reported with
// a witness. Immutable after construction; all queries are pure.
class Matroid {
 public:
  static Matroid from_circuits(int n,
                               const std::vector<std::vector<int>>& circuits);
  static Matroid from_circuit_masks(int n, std::vector<SetMask> circuits);
  static Matroid uniform(int m, int n);
  static Matroid direct_sum(const Matroid& a, const Matroid& b);

  int n() const { return n_; }
  const std::vector<SetMask>& circuits() const { return circuits_; }
  std::vector<std::vector<int>> circuit_lists() const;

  // S is independent iff it contains no circuit.
  bool is_independent(SetMask s) const;
  bool is_dependent(SetMask s) const { return !is_independent(s); }

  int rank() const;
  int rank_of(SetMask s) const;
  SetMask closure(SetMask s) const;

  FlatsLattice flats_lattice() const;  // n <= kEnumLimit

  long long beta_invariant() const;  // n <= kEnumLimit

  std::vector<SetMask> components() const;  // partition of [n]
  bool is_connected() const { return components().size() == 1; }

  ElementClassification classify_elements() const;
  bool has_loops() const;

  std::vector<SetMask> broken_circuits() const;
  std::vector<SetMask> nbc_sets() const;  // n <= kEnumLimit

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && circuits_ == o.circuits_;
  }

 private:
  Matroid(int n, std::vector<SetMask> circuits);

  int n_;
  std::vector<SetMask> circuits_;  // sorted, validated
};

// Mobius function mu(cl(empty), X) for every flat X, indexed like l.flats.
std::vector<long long> mobius(const FlatsLattice& l);

// p(L;t) = sum_X mu(0,X) t^{r(M)-r(X)}.
poly::ZPoly characteristic_polynomial(const Matroid& m);

}  // namespace osforge::matroid

#endif  // OSFORGE_MATROID_HPP
