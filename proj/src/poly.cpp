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

#include "osforge/poly.hpp"

#include <stdexcept>

namespace osforge::poly {

ZPoly::ZPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

ZPoly ZPoly::constant(long long c) { return ZPoly({c}); }

ZPoly ZPoly::monomial(long long c, int k) {
  std::vector<long long> v(k + 1, 0);
  v[k] = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::one_plus_t_power(int s) {
  ZPoly out = constant(1);
  ZPoly base({1, 1});
  for (int i = 0; i < s; ++i) out = out * base;
  return out;
}

void ZPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<long long> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return ZPoly(std::move(out));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<long long> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  }
  return ZPoly(std::move(out));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  std::vector<long long> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return ZPoly(std::move(out));
}

long long ZPoly::eval(long long t) const {
  long long acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

std::optional<ZPoly> ZPoly::divide_exact(const ZPoly& o) const {
  if (o.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (is_zero()) return ZPoly();
  if (degree() < o.degree()) return std::nullopt;
  std::vector<long long> rem = coeffs_;
  std::vector<long long> quot(degree() - o.degree() + 1, 0);
  long long lead = o.coeffs_.back();
  for (int k = degree() - o.degree(); k >= 0; --k) {
    long long top = rem[k + o.degree()];
    if (top % lead != 0) return std::nullopt;
    long long q = top / lead;
    quot[k] = q;
    for (int j = 0; j <= o.degree(); ++j) {
      rem[k + j] -= q * o.coeffs_[j];
    }
  }
  for (long long c : rem) {
    if (c != 0) return std::nullopt;
  }
  return ZPoly(std::move(quot));
}

std::string ZPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) {
      out += (c > 0) ? "+" : "-";
    } else if (c < 0) {
      out += "-";
    }
    long long a = c > 0 ? c : -c;
    if (a != 1 || k == 0) out += std::to_string(a);
    if (k >= 1) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace osforge::poly
