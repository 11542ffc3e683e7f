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

#include "osforge/classify.hpp"

#include <bit>
#include <stdexcept>

#include "osforge/monomial.hpp"

namespace osforge::classify {

using matroid::Matroid;
using matroid::SetMask;

std::string class_kind_name(LinearClassKind k) {
  switch (k) {
    case LinearClassKind::loop_case:
      return "loop";
    case LinearClassKind::parallel_sums:
      return "parallel-sums";
    case LinearClassKind::uniform_plus_coloops:
      return "uniform-plus-coloops";
    case LinearClassKind::not_linear:
      return "not-linear";
  }
  return "?";
}

namespace {

long long binom(long long n, long long k) { return exterior::binomial(n, k); }

// The circuits inside T are exactly all (r+1)-subsets of T, where r is the
// rank of T. Vacuously true for empty T.
bool restriction_is_uniform(const Matroid& m, SetMask t, int* rank_out) {
  int r = m.rank_of(t);
  *rank_out = r;
  long long expected = binom(std::popcount(t), r + 1);
  long long count = 0;
  for (SetMask c : m.circuits()) {
    if ((c & t) != c) return false;  // circuit outside T: not our case
    if (std::popcount(c) != r + 1) return false;
    ++count;
  }
  return count == expected;
}

}  // namespace

LinearResolutionClass classify_linear_resolution(const Matroid& m) {
  if (m.has_loops()) {
    return LinearResolutionClass{LinearClassKind::loop_case, 0, 0, {}};
  }
  auto elements = m.classify_elements();
  int f = static_cast<int>(elements.coloops.size());

  if (elements.is_simple) {
    SetMask t = 0;
    for (int i = 1; i <= m.n(); ++i) t |= SetMask{1} << (i - 1);
    for (int c : elements.coloops) t &= ~(SetMask{1} << (c - 1));
    int rank = 0;
    if (restriction_is_uniform(m, t, &rank)) {
      return LinearResolutionClass{LinearClassKind::uniform_plus_coloops, rank,
                                   f, {}};
    }
    return LinearResolutionClass{LinearClassKind::not_linear, 0, 0, {}};
  }

  // non-trivial parallel classes: every non-singleton component must be a
  // rank-1 uniform, i.e. all of its 2-subsets are circuits
  std::vector<int> parts;
  for (SetMask comp : m.components()) {
    int size = std::popcount(comp);
    if (size == 1) continue;
    long long pairs = 0;
    for (SetMask c : m.circuits()) {
      if ((c & comp) != c) continue;
      if (std::popcount(c) != 2) {
        return LinearResolutionClass{LinearClassKind::not_linear, 0, 0, {}};
      }
      ++pairs;
    }
    if (pairs != binom(size, 2)) {
      return LinearResolutionClass{LinearClassKind::not_linear, 0, 0, {}};
    }
    parts.push_back(size);
  }
  return LinearResolutionClass{LinearClassKind::parallel_sums, 1, f,
                               std::move(parts)};
}

std::optional<long long> predicted_betti(const Matroid& m, int i) {
  LinearResolutionClass cls = classify_linear_resolution(m);
  int n = m.n();
  switch (cls.kind) {
    case LinearClassKind::uniform_plus_coloops:
      if (m.circuits().empty()) return 0;  // zero ideal
      return binom(n - cls.f - 1 + i, cls.m + i) * binom(cls.m + i - 1, i);
    case LinearClassKind::parallel_sums: {
      int k = static_cast<int>(cls.parts.size());
      return binom(n - cls.f - k + i, i + 1);
    }
    default:
      return std::nullopt;
  }
}

PredictedInvariants predicted_invariants(const Matroid& m) {
  if (m.has_loops()) {
    throw std::invalid_argument("predicted_invariants: matroid has a loop");
  }
  int k = static_cast<int>(m.components().size());
  int l = m.rank();
  return PredictedInvariants{k, m.n() - k, l - k, l};
}

std::string rank3_profile_name(Rank3Profile p) {
  switch (p) {
    case Rank3Profile::pencil:
      return "pencil";
    case Rank3Profile::near_pencil:
      return "near-pencil";
    case Rank3Profile::other_simple_rank3:
      return "other-simple-rank3";
    case Rank3Profile::not_applicable:
      return "not-applicable";
  }
  return "?";
}

namespace {

bool circuits_are_all_triples_of(const Matroid& m, SetMask t) {
  long long expected = binom(std::popcount(t), 3);
  long long count = 0;
  for (SetMask c : m.circuits()) {
    if ((c & t) != c || std::popcount(c) != 3) return false;
    ++count;
  }
  return count == expected && expected > 0;
}

}  // namespace

Rank3Profile rank3_profile(const Matroid& m) {
  int n = m.n();
  SetMask full = n == 0 ? 0 : (SetMask{1} << n) - 1;
  Rank3Profile profile = Rank3Profile::not_applicable;
  if (n >= 3 && circuits_are_all_triples_of(m, full)) {
    profile = Rank3Profile::pencil;
  } else if (n >= 3) {
    bool near = false;
    for (int drop = 1; drop <= n && !near; ++drop) {
      SetMask t = full & ~(SetMask{1} << (drop - 1));
      // near pencil: the dropped element is a coloop and the rest is U_{2,n-1}
      if (m.circuits().empty()) {
        near = (n == 3);  // U_{3,3} = U_{2,2} + U_{1,1}
      } else {
        near = circuits_are_all_triples_of(m, t);
      }
    }
    if (near) profile = Rank3Profile::near_pencil;
  }
  auto elements = m.classify_elements();
  if (profile == Rank3Profile::not_applicable && elements.is_simple &&
      m.rank() == 3) {
    profile = Rank3Profile::other_simple_rank3;
  }
  if (elements.is_simple && m.rank() == 3) {
    bool connected = m.is_connected();
    if (connected == (profile == Rank3Profile::near_pencil)) {
      throw std::logic_error(
          "rank3_profile: connectivity contradicts the near-pencil "
          "dichotomy");
    }
  }
  return profile;
}

}  // namespace osforge::classify
