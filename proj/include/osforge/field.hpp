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

#ifndef OSFORGE_FIELD_HPP
#define OSFORGE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>

namespace osforge::la {

// A field element. For prime fields the int64 alternative holds the
// canonical residue in [0, p); for the rationals the mpq alternative holds
// an exact reduced fraction. All arithmetic goes through Field, which knows
// which alternative is live.
using Scalar = std::variant<std::int64_t, mpq_class>;

constexpr std::int64_t kDefaultPrime = 32003;

// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
// Arithmetic is exact everywhere; there is no floating point in the system.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals();
  static Field prime(std::int64_t p);  // throws std::invalid_argument if p
                                       // is not a prime in [2, 2^31)

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }
  std::int64_t characteristic() const { return kind_ == Kind::prime ? p_ : 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  // Uniform over GF(p); small random integers in [-9, 9] over the rationals.
  Scalar random(std::mt19937_64& rng) const;
  Scalar random_nonzero(std::mt19937_64& rng) const;

  std::string str(const Scalar& a) const;

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // Canonical residue of a prime-field scalar (value in [0, p)).
  std::int64_t residue(const Scalar& a) const;
  Scalar from_residue(std::int64_t v) const;  // v already in [0, p)

  std::string name() const;  // "QQ" or "GF(p)"

 private:
  Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::int64_t p_;  // valid iff kind_ == prime
};

bool is_prime_int(std::int64_t p);

}  // namespace osforge::la

#endif  // OSFORGE_FIELD_HPP
