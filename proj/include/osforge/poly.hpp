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

#ifndef OSFORGE_POLY_HPP
#define OSFORGE_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace osforge::poly {

// Polynomial in Z[t]; coefficient of t^k at index k. The zero polynomial has
// no coefficients. Hilbert series of graded E-modules and characteristic
// polynomials of matroids both live here.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<long long> coeffs);
  static ZPoly constant(long long c);
  static ZPoly monomial(long long c, int k);
  static ZPoly one_plus_t_power(int s);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int k) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const ZPoly& o) const { return coeffs_ != o.coeffs_; }

  long long eval(long long t) const;

  // Exact division; nullopt if o does not divide *this (o monic-leading not
  // required, but division must be exact over Z).
  std::optional<ZPoly> divide_exact(const ZPoly& o) const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<long long> coeffs_;
};

}  // namespace osforge::poly

#endif  // OSFORGE_POLY_HPP
