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

#include "osforge/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace osforge::homology {

using la::Field;
using la::Scalar;
using la::SparseMatrix;

namespace {

// All a in N^m with |a| = i, lexicographic; index map for slot lookups.
struct DividedPowers {
  std::vector<std::vector<int>> slots;
  std::map<std::vector<int>, int> index;
};

void enumerate_compositions(int m, int i, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    prefix.push_back(i);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = i; a >= 0; --a) {
    prefix.push_back(a);
    enumerate_compositions(m, i - a, prefix, out);
    prefix.pop_back();
  }
}

DividedPowers divided_powers(int m, int i) {
  DividedPowers out;
  if (m == 0) {
    if (i == 0) out.slots.push_back({});
  } else {
    std::vector<int> prefix;
    enumerate_compositions(m, i, prefix, out.slots);
  }
  for (std::size_t k = 0; k < out.slots.size(); ++k) {
    out.index[out.slots[k]] = static_cast<int>(k);
  }
  return out;
}

struct ActionCache {
  const GradedModuleRep& m;
  const std::vector<std::vector<Scalar>>& v;
  std::map<std::pair<int, int>, SparseMatrix> cache;  // (j, d) -> action

  const SparseMatrix& get(int j, int d) {
    auto key = std::make_pair(j, d);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, m.action_of(v[j], d)).first;
    }
    return it->second;
  }
};

// The Cartan differential C_i -> C_{i-1} in total degree t.
SparseMatrix homology_differential(ActionCache& actions,
                                   const DividedPowers& src,
                                   const DividedPowers& dst, int i, int t) {
  const GradedModuleRep& m = actions.m;
  int src_deg = t - i;
  int dst_deg = src_deg + 1;
  int src_block = m.dim(src_deg);
  int dst_block = m.dim(dst_deg);
  long long cols = static_cast<long long>(src.slots.size()) * src_block;
  long long rows = static_cast<long long>(dst.slots.size()) * dst_block;
  SparseMatrix d(m.field(), static_cast<int>(rows), static_cast<int>(cols));
  if (cols == 0 || rows == 0) return d;

  int mlen = static_cast<int>(actions.v.size());
  for (std::size_t ia = 0; ia < src.slots.size(); ++ia) {
    std::vector<int> a = src.slots[ia];
    for (int j = 0; j < mlen; ++j) {
      if (a[j] == 0) continue;
      --a[j];
      int ib = dst.index.at(a);
      ++a[j];
      const SparseMatrix& block = actions.get(j, src_deg);
      for (int r = 0; r < block.rows(); ++r) {
        for (const auto& [c, val] : block.row(r)) {
          d.add_at(ib * dst_block + r, static_cast<int>(ia) * src_block + c,
                   val);
        }
      }
    }
  }
  return d;
}

int homology_differential_rank(ActionCache& actions, const DividedPowers& src,
                               const DividedPowers& dst, int i, int t) {
  return la::rank(homology_differential(actions, src, dst, i, t));
}

// Rank of the cocomplex differential C^i -> C^{i+1} at internal grading j.
int cohomology_differential_rank(ActionCache& actions,
                                 const DividedPowers& src,
                                 const DividedPowers& dst, int i, int j) {
  const GradedModuleRep& m = actions.m;
  int src_deg = i + j;
  int dst_deg = src_deg + 1;
  int src_block = m.dim(src_deg);
  int dst_block = m.dim(dst_deg);
  long long cols = static_cast<long long>(src.slots.size()) * src_block;
  long long rows = static_cast<long long>(dst.slots.size()) * dst_block;
  if (cols == 0 || rows == 0) return 0;

  SparseMatrix d(m.field(), static_cast<int>(rows), static_cast<int>(cols));
  int mlen = static_cast<int>(actions.v.size());
  for (std::size_t ia = 0; ia < src.slots.size(); ++ia) {
    std::vector<int> a = src.slots[ia];
    for (int k = 0; k < mlen; ++k) {
      ++a[k];
      int ib = dst.index.at(a);
      --a[k];
      const SparseMatrix& block = actions.get(k, src_deg);
      for (int r = 0; r < block.rows(); ++r) {
        for (const auto& [c, val] : block.row(r)) {
          d.add_at(ib * dst_block + r, static_cast<int>(ia) * src_block + c,
                   val);
        }
      }
    }
  }
  return la::rank(d);
}

void check_sequence(const std::vector<std::vector<Scalar>>& v,
                    const GradedModuleRep& m) {
  for (const auto& coords : v) {
    if (static_cast<int>(coords.size()) != m.n()) {
      throw std::invalid_argument("cartan: sequence coordinate mismatch");
    }
  }
}

}  // namespace

std::vector<GradedDims> cartan_homology(
    const std::vector<std::vector<Scalar>>& v, const GradedModuleRep& m,
    int i_max) {
  check_sequence(v, m);
  int mlen = static_cast<int>(v.size());
  int top = m.max_degree();
  ActionCache actions{m, v, {}};

  std::vector<DividedPowers> dp;
  dp.reserve(i_max + 2);
  for (int i = 0; i <= i_max + 1; ++i) dp.push_back(divided_powers(mlen, i));

  // rank of the differential into C_{i-1} for i = 1..i_max+1, per degree
  std::map<std::pair<int, int>, int> ranks;
  for (int i = 1; i <= i_max + 1; ++i) {
    for (int t = i; t <= i + top; ++t) {
      ranks[{i, t}] = homology_differential_rank(actions, dp[i], dp[i - 1], i, t);
    }
  }

  std::vector<GradedDims> out(i_max + 1);
  for (int i = 0; i <= i_max; ++i) {
    long long slots = static_cast<long long>(dp[i].slots.size());
    for (int t = i; t <= i + top; ++t) {
      long long cdim = slots * m.dim(t - i);
      long long rank_in = i == 0 ? 0 : ranks[{i, t}];
      auto it = ranks.find({i + 1, t});
      long long rank_out = it == ranks.end() ? 0 : it->second;
      long long h = cdim - rank_in - rank_out;
      if (h < 0) {
        throw std::logic_error("cartan_homology: negative dimension");
      }
      if (h > 0) out[i].by_degree[t] = static_cast<int>(h);
    }
  }
  return out;
}

std::vector<GradedDims> cartan_cohomology(
    const std::vector<std::vector<Scalar>>& v, const GradedModuleRep& m,
    int i_max) {
  check_sequence(v, m);
  int mlen = static_cast<int>(v.size());
  int top = m.max_degree();
  ActionCache actions{m, v, {}};

  std::vector<DividedPowers> dp;
  dp.reserve(i_max + 2);
  for (int i = 0; i <= i_max + 1; ++i) dp.push_back(divided_powers(mlen, i));

  // rank of C^i -> C^{i+1} for i = 0..i_max, per internal grading j
  std::map<std::pair<int, int>, int> ranks;
  for (int i = 0; i <= i_max; ++i) {
    for (int j = -i; j <= top - i; ++j) {
      ranks[{i, j}] =
          cohomology_differential_rank(actions, dp[i], dp[i + 1], i, j);
    }
  }

  std::vector<GradedDims> out(i_max + 1);
  for (int i = 0; i <= i_max; ++i) {
    long long slots = static_cast<long long>(dp[i].slots.size());
    for (int j = -i; j <= top - i; ++j) {
      long long cdim = slots * m.dim(i + j);
      long long rank_out = ranks[{i, j}];
      long long rank_in = 0;
      if (i > 0) {
        auto it = ranks.find({i - 1, j});
        rank_in = it == ranks.end() ? 0 : it->second;
      }
      long long h = cdim - rank_out - rank_in;
      if (h < 0) {
        throw std::logic_error("cartan_cohomology: negative dimension");
      }
      if (h > 0) out[i].by_degree[j] = static_cast<int>(h);
    }
  }
  return out;
}

la::SparseMatrix cartan_differential(
    const std::vector<std::vector<Scalar>>& v, const GradedModuleRep& m,
    int i, int t) {
  check_sequence(v, m);
  if (i < 1) {
    throw std::invalid_argument("cartan_differential: need i >= 1");
  }
  int mlen = static_cast<int>(v.size());
  ActionCache actions{m, v, {}};
  DividedPowers src = divided_powers(mlen, i);
  DividedPowers dst = divided_powers(mlen, i - 1);
  return homology_differential(actions, src, dst, i, t);
}

long long HomTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

long long HomTable::total(int i) const {
  long long out = 0;
  for (const auto& [key, v] : entries) {
    if (key.first == i) out += v;
  }
  return out;
}

int HomTable::max_slope() const {
  int out = -1;
  bool any = false;
  for (const auto& [key, v] : entries) {
    if (v != 0) {
      int slope = key.second - key.first;
      out = any ? std::max(out, slope) : slope;
      any = true;
    }
  }
  return any ? out : -1;
}

std::string HomTable::str(const std::string& label) const {
  std::string out;
  for (const auto& [key, v] : entries) {
    out += label + "_{" + std::to_string(key.first) + "," +
           std::to_string(key.second) + "} = " + std::to_string(v) + "\n";
  }
  return out;
}

std::vector<std::vector<Scalar>> canonical_sequence(int n, const Field& field) {
  std::vector<std::vector<Scalar>> out(n,
                                       std::vector<Scalar>(n, field.zero()));
  for (int i = 0; i < n; ++i) out[i][i] = field.one();
  return out;
}

BettiTable betti_table(const GradedModuleRep& m, int i_max) {
  auto homology = cartan_homology(canonical_sequence(m.n(), m.field()), m, i_max);
  BettiTable out;
  out.i_max = i_max;
  for (int i = 0; i <= i_max; ++i) {
    for (const auto& [t, dim] : homology[i].by_degree) {
      out.entries[{i, t}] = dim;
    }
  }
  return out;
}

BassTable bass_table(const std::vector<exterior::ExteriorElement>& quotient_gens,
                     int n, const Field& field, int i_max) {
  std::vector<exterior::ExteriorElement> ann =
      annihilator(quotient_gens, n, field);
  BettiTable dual = betti_table(module_from_ideal(ann, n, field), i_max);
  BassTable out;
  out.i_max = i_max;
  for (const auto& [key, v] : dual.entries) {
    out.entries[{key.first, n - key.second}] = v;
  }
  return out;
}

BassTable bass_table_cocomplex(const GradedModuleRep& m, int i_max) {
  auto cohomology =
      cartan_cohomology(canonical_sequence(m.n(), m.field()), m, i_max);
  BassTable out;
  out.i_max = i_max;
  for (int i = 0; i <= i_max; ++i) {
    for (const auto& [j, dim] : cohomology[i].by_degree) {
      out.entries[{i, j}] = dim;
    }
  }
  return out;
}

}  // namespace osforge::homology
