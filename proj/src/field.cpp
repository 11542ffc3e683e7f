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

#include "osforge/field.hpp"

#include <stdexcept>

namespace osforge::la {

namespace {

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

// Extended Euclid; a in [1, p).
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::logic_error("inv_mod: not invertible");
  return mod_pos(old_s, p);
}

const std::int64_t& ival(const Scalar& a) { return std::get<std::int64_t>(a); }
const mpq_class& qval(const Scalar& a) { return std::get<mpq_class>(a); }

}  // namespace

bool is_prime_int(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::rationals() { return Field(Kind::rationals, 0); }

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime_int(p)) {
    throw std::invalid_argument("Field::prime: p must be a prime in [2, 2^31)");
  }
  return Field(Kind::prime, p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::prime) return Scalar(std::in_place_index<0>, mod_pos(v, p_));
  return Scalar(std::in_place_index<1>, mpq_class(static_cast<long>(v)));
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::invalid_argument("from_fraction: zero denominator");
  if (kind_ == Kind::prime) {
    std::int64_t d = mod_pos(den, p_);
    if (d == 0) throw std::invalid_argument("from_fraction: denominator divisible by p");
    return Scalar(std::in_place_index<0>,
                  mod_pos(mod_pos(num, p_) * inv_mod(d, p_), p_));
  }
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Scalar(std::in_place_index<1>, q);
}

Scalar Field::from_residue(std::int64_t v) const {
  return Scalar(std::in_place_index<0>, v);
}

std::int64_t Field::residue(const Scalar& a) const { return ival(a); }

bool Field::is_zero(const Scalar& a) const {
  if (kind_ == Kind::prime) return ival(a) == 0;
  return sgn(qval(a)) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (kind_ == Kind::prime) return ival(a) == 1;
  return qval(a) == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) return ival(a) == ival(b);
  return qval(a) == qval(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) {
    return Scalar(std::in_place_index<0>, mod_pos(ival(a) + ival(b), p_));
  }
  return Scalar(std::in_place_index<1>, mpq_class(qval(a) + qval(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) {
    return Scalar(std::in_place_index<0>, mod_pos(ival(a) - ival(b), p_));
  }
  return Scalar(std::in_place_index<1>, mpq_class(qval(a) - qval(b)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) {
    return Scalar(std::in_place_index<0>, mod_pos(ival(a) * ival(b), p_));
  }
  return Scalar(std::in_place_index<1>, mpq_class(qval(a) * qval(b)));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::prime) {
    return Scalar(std::in_place_index<0>, ival(a) == 0 ? 0 : p_ - ival(a));
  }
  return Scalar(std::in_place_index<1>, mpq_class(-qval(a)));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("Field::inv: division by zero");
  if (kind_ == Kind::prime) {
    return Scalar(std::in_place_index<0>, inv_mod(ival(a), p_));
  }
  return Scalar(std::in_place_index<1>, mpq_class(1 / qval(a)));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (kind_ == Kind::prime) {
    std::uniform_int_distribution<std::int64_t> dist(0, p_ - 1);
    return Scalar(std::in_place_index<0>, dist(rng));
  }
  std::uniform_int_distribution<int> dist(-9, 9);
  return from_int(dist(rng));
}

Scalar Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    Scalar s = random(rng);
    if (!is_zero(s)) return s;
  }
}

std::string Field::str(const Scalar& a) const {
  if (kind_ == Kind::prime) return std::to_string(ival(a));
  return qval(a).get_str();
}

std::string Field::name() const {
  if (kind_ == Kind::prime) return "GF(" + std::to_string(p_) + ")";
  return "QQ";
}

}  // namespace osforge::la
