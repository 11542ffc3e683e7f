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

#include "osforge/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace osforge::exterior {

std::vector<int> support(Monomial u) {
  std::vector<int> out;
  while (u) {
    int k = std::countr_zero(u);
    out.push_back(k + 1);
    u &= u - 1;
  }
  return out;
}

Monomial monomial_from_indices(int n, const std::vector<int>& indices) {
  if (n < 0 || n > kMaxVars) {
    throw std::invalid_argument("monomial_from_indices: n out of range");
  }
  Monomial u = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("monomial_from_indices: index " +
                                  std::to_string(i) + " not in 1.." +
                                  std::to_string(n));
    }
    Monomial bit = Monomial{1} << (i - 1);
    if (u & bit) {
      throw std::invalid_argument("monomial_from_indices: repeated index " +
                                  std::to_string(i));
    }
    u |= bit;
  }
  return u;
}

std::string monomial_str(Monomial u) {
  if (u == 0) return "1";
  std::string out = "e[";
  bool first = true;
  for (int i : support(u)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "]";
  return out;
}

int wedge_sign(Monomial s, Monomial t) {
  int inversions = 0;
  Monomial tt = t;
  while (tt) {
    int k = std::countr_zero(tt);  // 0-based position of an element of t
    inversions += std::popcount(s >> (k + 1));
    tt &= tt - 1;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "std" || name == "std_revlex") return MonomialOrder::std_revlex;
  if (name == "rev" || name == "rev_compat") return MonomialOrder::rev_compat;
  throw std::invalid_argument("unknown monomial order: " + name);
}

std::string order_name(MonomialOrder o) {
  return o == MonomialOrder::std_revlex ? "std" : "rev";
}

bool monomial_greater(Monomial u, Monomial v, MonomialOrder order) {
  if (u == v) return false;
  Monomial diff = u ^ v;
  int m = std::bit_width(diff);  // 1-based max of the symmetric difference
  bool in_u = (u >> (m - 1)) & 1;
  return order == MonomialOrder::std_revlex ? !in_u : in_u;
}

std::vector<Monomial> graded_monomials(int n, int d, MonomialOrder order) {
  if (n < 0 || n > kMaxVars || d < 0 || d > n) {
    throw std::invalid_argument("graded_monomials: degree out of range");
  }
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(n, d)));
  if (d == 0) {
    out.push_back(kOne);
    return out;
  }
  // Gosper's hack over the first combination.
  Monomial u = (Monomial{1} << d) - 1;
  Monomial limit = Monomial{1} << n;
  while (u < limit) {
    out.push_back(u);
    Monomial c = u & (~u + 1);
    Monomial r = u + c;
    u = (((r ^ u) >> 2) / c) | r;
    if (r == 0) break;
  }
  std::sort(out.begin(), out.end(), [order](Monomial a, Monomial b) {
    return monomial_greater(a, b, order);
  });
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (long long i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

}  // namespace osforge::exterior
