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

#include "osforge/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace osforge::matroid {

std::vector<int> set_elements(SetMask s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

SetMask set_from_elements(int n, const std::vector<int>& elements) {
  SetMask s = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw MatroidError("element " + std::to_string(e) + " not in 1.." +
                         std::to_string(n));
    }
    s |= SetMask{1} << (e - 1);
  }
  return s;
}

std::string set_str(SetMask s) {
  std::string out = "{";
  bool first = true;
  for (int e : set_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

int FlatsLattice::bottom() const {
  return flats.empty() ? -1 : 0;  // flats sorted by (rank, mask)
}

int FlatsLattice::top() const {
  return flats.empty() ? -1 : static_cast<int>(flats.size()) - 1;
}

int FlatsLattice::index_of(SetMask s) const {
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].elements == s) return static_cast<int>(i);
  }
  return -1;
}

Matroid::Matroid(int n, std::vector<SetMask> circuits)
    : n_(n), circuits_(std::move(circuits)) {
  if (n < 0 || n > kMaxGround) {
    throw MatroidError("ground set size must be in 0.." +
                       std::to_string(kMaxGround));
  }
  std::sort(circuits_.begin(), circuits_.end());
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()),
                  circuits_.end());
  for (SetMask c : circuits_) {
    if (c == 0) throw MatroidError("the empty set cannot be a circuit");
    if (std::bit_width(c) > static_cast<unsigned>(n)) {
      throw MatroidError("circuit exceeds the ground set");
    }
  }
  // antichain
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    for (std::size_t j = 0; j < circuits_.size(); ++j) {
      if (i != j && (circuits_[i] & circuits_[j]) == circuits_[i]) {
        throw MatroidError("antichain violated: circuit " +
                           set_str(circuits_[i]) + " is contained in " +
                           set_str(circuits_[j]));
      }
    }
  }
  // circuit elimination
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits_.size(); ++j) {
      SetMask meet = circuits_[i] & circuits_[j];
      SetMask join = circuits_[i] | circuits_[j];
      SetMask rest = meet;
      while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        SetMask target = join & ~(SetMask{1} << bit);
        bool found = false;
        for (SetMask c : circuits_) {
          if ((c & target) == c) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw MatroidError(
              "circuit elimination violated: circuits " +
              set_str(circuits_[i]) + ", " + set_str(circuits_[j]) +
              " at element " + std::to_string(bit + 1) +
              " admit no circuit inside " + set_str(target));
        }
      }
    }
  }
}

Matroid Matroid::from_circuits(int n,
                               const std::vector<std::vector<int>>& circuits) {
  std::vector<SetMask> masks;
  masks.reserve(circuits.size());
  for (const auto& c : circuits) masks.push_back(set_from_elements(n, c));
  return Matroid(n, std::move(masks));
}

Matroid Matroid::from_circuit_masks(int n, std::vector<SetMask> circuits) {
  return Matroid(n, std::move(circuits));
}

Matroid Matroid::uniform(int m, int n) {
  if (m < 0 || m > n) {
    throw MatroidError("uniform(m, n) needs 0 <= m <= n");
  }
  if (n > kMaxGround) {
    throw MatroidError("ground set size must be at most " +
                       std::to_string(kMaxGround));
  }
  std::vector<SetMask> circuits;
  if (m < n) {
    // all (m+1)-subsets of [n], Gosper's hack
    SetMask u = (SetMask{1} << (m + 1)) - 1;
    SetMask limit = SetMask{1} << n;
    while (u < limit) {
      circuits.push_back(u);
      SetMask c = u & (~u + 1);
      SetMask r = u + c;
      u = (((r ^ u) >> 2) / c) | r;
    }
  }
  return Matroid(n, std::move(circuits));
}

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n_ + b.n_ > kMaxGround) {
    throw MatroidError("direct sum exceeds the maximal ground set size");
  }
  std::vector<SetMask> circuits = a.circuits_;
  for (SetMask c : b.circuits_) circuits.push_back(c << a.n_);
  return Matroid(a.n_ + b.n_, std::move(circuits));
}

std::vector<std::vector<int>> Matroid::circuit_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(circuits_.size());
  for (SetMask c : circuits_) out.push_back(set_elements(c));
  return out;
}

bool Matroid::is_independent(SetMask s) const {
  for (SetMask c : circuits_) {
    if ((c & s) == c) return false;
  }
  return true;
}

int Matroid::rank_of(SetMask s) const {
  SetMask t = 0;
  SetMask rest = s;
  while (rest) {
    int bit = std::countr_zero(rest);
    rest &= rest - 1;
    SetMask candidate = t | (SetMask{1} << bit);
    if (is_independent(candidate)) t = candidate;
  }
  return std::popcount(t);
}

int Matroid::rank() const {
  return rank_of(n_ == 0 ? 0 : (SetMask{1} << n_) - 1);
}

SetMask Matroid::closure(SetMask s) const {
  int r = rank_of(s);
  SetMask out = s;
  for (int i = 0; i < n_; ++i) {
    SetMask bit = SetMask{1} << i;
    if (out & bit) continue;
    if (rank_of(s | bit) == r) out |= bit;
  }
  return out;
}

FlatsLattice Matroid::flats_lattice() const {
  if (n_ > kEnumLimit) {
    throw MatroidError("flats_lattice: ground set too large (n <= " +
                       std::to_string(kEnumLimit) + ")");
  }
  FlatsLattice lattice;
  lattice.n = n_;
  std::set<SetMask> seen;
  std::vector<SetMask> level = {closure(0)};
  seen.insert(level[0]);
  int level_rank = 0;
  while (!level.empty()) {
    for (SetMask f : level) {
      lattice.flats.push_back({f, level_rank});
    }
    std::vector<SetMask> next;
    for (SetMask f : level) {
      for (int i = 0; i < n_; ++i) {
        SetMask bit = SetMask{1} << i;
        if (f & bit) continue;
        SetMask g = closure(f | bit);
        if (seen.insert(g).second) next.push_back(g);
      }
    }
    level = std::move(next);
    ++level_rank;
  }
  std::sort(lattice.flats.begin(), lattice.flats.end(),
            [](const Flat& a, const Flat& b) {
              return a.rank != b.rank ? a.rank < b.rank
                                      : a.elements < b.elements;
            });
  return lattice;
}

std::vector<long long> mobius(const FlatsLattice& l) {
  std::vector<long long> mu(l.flats.size(), 0);
  if (l.flats.empty()) return mu;
  mu[0] = 1;  // bottom flat (lowest rank, flats are sorted)
  for (std::size_t i = 1; i < l.flats.size(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if ((l.flats[j].elements & l.flats[i].elements) == l.flats[j].elements) {
        acc += mu[j];
      }
    }
    mu[i] = -acc;
  }
  return mu;
}

poly::ZPoly characteristic_polynomial(const Matroid& m) {
  FlatsLattice l = m.flats_lattice();
  std::vector<long long> mu = mobius(l);
  int r = m.rank();
  std::vector<long long> coeffs(r + 1, 0);
  for (std::size_t i = 0; i < l.flats.size(); ++i) {
    coeffs[r - l.flats[i].rank] += mu[i];
  }
  return poly::ZPoly(std::move(coeffs));
}

long long Matroid::beta_invariant() const {
  if (n_ > kEnumLimit) {
    throw MatroidError("beta_invariant: ground set too large");
  }
  int r = rank();
  long long subset_sum = 0;
  SetMask full = n_ == 0 ? 0 : (SetMask{1} << n_) - 1;
  for (SetMask s = 0;; ++s) {
    long long sign = (std::popcount(s) % 2 == 0) ? 1 : -1;
    subset_sum += sign * rank_of(s);
    if (s == full) break;
  }
  long long beta_subsets = ((r % 2 == 0) ? 1 : -1) * subset_sum;

  // The flats-sum form needs mu taken from the empty set, so it only
  // applies when cl({}) = {}; with loops the subset form pairs S with
  // S + loop and vanishes on its own.
  if (!has_loops()) {
    FlatsLattice l = flats_lattice();
    std::vector<long long> mu = mobius(l);
    long long flats_sum = 0;
    for (std::size_t i = 0; i < l.flats.size(); ++i) {
      flats_sum += mu[i] * l.flats[i].rank;
    }
    long long beta_flats = ((r % 2 == 0) ? 1 : -1) * flats_sum;
    if (beta_subsets != beta_flats) {
      throw std::logic_error(
          "beta invariant: subset and flats formulas differ");
    }
  }
  return beta_subsets;
}

std::vector<SetMask> Matroid::components() const {
  std::vector<int> parent(n_);
  for (int i = 0; i < n_; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (SetMask c : circuits_) {
    auto elems = set_elements(c);
    for (std::size_t k = 1; k < elems.size(); ++k) {
      parent[find(elems[0] - 1)] = find(elems[k] - 1);
    }
  }
  std::map<int, SetMask> groups;
  for (int i = 0; i < n_; ++i) {
    groups[find(i)] |= SetMask{1} << i;
  }
  std::vector<SetMask> out;
  out.reserve(groups.size());
  for (const auto& [root, mask] : groups) out.push_back(mask);
  std::sort(out.begin(), out.end(),
            [](SetMask a, SetMask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

bool Matroid::has_loops() const {
  for (SetMask c : circuits_) {
    if (std::popcount(c) == 1) return true;
  }
  return false;
}

ElementClassification Matroid::classify_elements() const {
  ElementClassification out;
  SetMask loop_mask = 0;
  SetMask covered = 0;
  for (SetMask c : circuits_) {
    covered |= c;
    if (std::popcount(c) == 1) loop_mask |= c;
  }
  out.loops = set_elements(loop_mask);

  // parallel classes: union-find over the 2-element circuits
  std::vector<int> parent(n_);
  for (int i = 0; i < n_; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (SetMask c : circuits_) {
    if (std::popcount(c) == 2) {
      auto e = set_elements(c);
      parent[find(e[0] - 1)] = find(e[1] - 1);
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n_; ++i) {
    if (loop_mask & (SetMask{1} << i)) continue;
    classes[find(i)].push_back(i + 1);
  }
  for (const auto& [root, members] : classes) {
    if (members.size() >= 2) out.parallel_classes.push_back(members);
  }
  for (int i = 0; i < n_; ++i) {
    if (!(covered & (SetMask{1} << i))) out.coloops.push_back(i + 1);
  }
  out.is_simple = out.loops.empty() && out.parallel_classes.empty();
  return out;
}

std::vector<SetMask> Matroid::broken_circuits() const {
  std::vector<SetMask> out;
  out.reserve(circuits_.size());
  for (SetMask c : circuits_) {
    out.push_back(c & (c - 1));  // drop the minimal element
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SetMask> Matroid::nbc_sets() const {
  if (n_ > kEnumLimit) {
    throw MatroidError("nbc_sets: ground set too large");
  }
  std::vector<SetMask> broken = broken_circuits();
  std::vector<SetMask> out;
  SetMask full = n_ == 0 ? 0 : (SetMask{1} << n_) - 1;
  for (SetMask s = 0;; ++s) {
    bool nbc = true;
    for (SetMask b : broken) {
      if ((b & s) == b) {
        nbc = false;
        break;
      }
    }
    if (nbc) out.push_back(s);
    if (s == full) break;
  }
  std::sort(out.begin(), out.end(), [](SetMask a, SetMask b) {
    int da = std::popcount(a), db = std::popcount(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

}  // namespace osforge::matroid
