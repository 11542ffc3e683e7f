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

#include "osforge/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace osforge::exterior {

namespace {

void check_context(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.n() != b.n() || a.field() != b.field()) {
    throw std::invalid_argument("exterior: algebra context mismatch");
  }
}

}  // namespace

ExteriorElement::ExteriorElement(int n, la::Field field)
    : n_(n), field_(field) {
  if (n < 0 || n > kMaxVars) {
    throw std::invalid_argument("ExteriorElement: n must be in 0.." +
                                std::to_string(kMaxVars));
  }
}

ExteriorElement ExteriorElement::zero(int n, const la::Field& field) {
  return ExteriorElement(n, field);
}

ExteriorElement ExteriorElement::unit(int n, const la::Field& field) {
  return term(n, field, kOne, field.one());
}

ExteriorElement ExteriorElement::variable(int n, const la::Field& field,
                                          int i) {
  return term(n, field, monomial_from_indices(n, {i}), field.one());
}

ExteriorElement ExteriorElement::term(int n, const la::Field& field,
                                      Monomial u, const la::Scalar& c) {
  if (max_index(u) > n) {
    throw std::invalid_argument("ExteriorElement::term: monomial exceeds n");
  }
  ExteriorElement out(n, field);
  out.add_term(u, c);
  return out;
}

la::Scalar ExteriorElement::coeff(Monomial u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? field_.zero() : it->second;
}

void ExteriorElement::add_term(Monomial u, const la::Scalar& c) {
  if (field_.is_zero(c)) return;
  auto it = terms_.find(u);
  if (it == terms_.end()) {
    terms_.emplace(u, c);
  } else {
    la::Scalar s = field_.add(it->second, c);
    if (field_.is_zero(s)) {
      terms_.erase(it);
    } else {
      it->second = s;
    }
  }
}

bool ExteriorElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = exterior::degree(terms_.begin()->first);
  for (const auto& [u, c] : terms_) {
    if (exterior::degree(u) != d) return false;
  }
  return true;
}

int ExteriorElement::degree() const {
  if (terms_.empty()) {
    throw std::logic_error("degree: zero element");
  }
  if (!is_homogeneous()) {
    throw std::logic_error("degree: element is not homogeneous");
  }
  return exterior::degree(terms_.begin()->first);
}

ExteriorElement ExteriorElement::homogeneous_component(int d) const {
  ExteriorElement out(n_, field_);
  for (const auto& [u, c] : terms_) {
    if (exterior::degree(u) == d) out.terms_.emplace(u, c);
  }
  return out;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  check_context(*this, o);
  ExteriorElement out = *this;
  for (const auto& [u, c] : o.terms_) out.add_term(u, c);
  return out;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const {
  check_context(*this, o);
  ExteriorElement out = *this;
  for (const auto& [u, c] : o.terms_) out.add_term(u, field_.neg(c));
  return out;
}

ExteriorElement ExteriorElement::scaled(const la::Scalar& c) const {
  ExteriorElement out(n_, field_);
  if (field_.is_zero(c)) return out;
  for (const auto& [u, v] : terms_) {
    out.terms_.emplace(u, field_.mul(v, c));
  }
  return out;
}

ExteriorElement ExteriorElement::negated() const {
  ExteriorElement out(n_, field_);
  for (const auto& [u, v] : terms_) out.terms_.emplace(u, field_.neg(v));
  return out;
}

bool ExteriorElement::equals(const ExteriorElement& o) const {
  if (n_ != o.n_ || field_ != o.field_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [u, c] : terms_) {
    if (it->first != u || !field_.eq(it->second, c)) return false;
    ++it;
  }
  return true;
}

la::SparseMatrix::Row ExteriorElement::coords(
    const std::vector<Monomial>& basis) const {
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index[basis[i]] = static_cast<int>(i);
  }
  la::SparseMatrix::Row row;
  for (const auto& [u, c] : terms_) {
    auto it = index.find(u);
    if (it == index.end()) {
      throw std::invalid_argument("coords: monomial not in basis");
    }
    row.push_back({it->second, c});
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

ExteriorElement ExteriorElement::from_coords(int n, const la::Field& field,
                                             const std::vector<Monomial>& basis,
                                             const la::SparseMatrix::Row& row) {
  ExteriorElement out(n, field);
  for (const auto& [col, c] : row) {
    out.add_term(basis.at(col), c);
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  check_context(a, b);
  ExteriorElement out(a.n_, a.field_);
  const la::Field& f = a.field_;
  for (const auto& [s, cs] : a.terms_) {
    for (const auto& [t, ct] : b.terms_) {
      if (s & t) continue;
      la::Scalar c = f.mul(cs, ct);
      if (wedge_sign(s, t) < 0) c = f.neg(c);
      out.add_term(s | t, c);
    }
  }
  return out;
}

ExteriorElement boundary(const ExteriorElement& a) {
  ExteriorElement out(a.n_, a.field_);
  const la::Field& f = a.field_;
  for (const auto& [u, c] : a.terms_) {
    int pos = 0;  // position of the index within u (0-based)
    Monomial rest = u;
    while (rest) {
      int k = std::countr_zero(rest);
      la::Scalar s = (pos % 2 == 0) ? c : f.neg(c);
      out.add_term(u & ~(Monomial{1} << k), s);
      rest &= rest - 1;
      ++pos;
    }
  }
  return out;
}

namespace {

ExteriorElement apply_endomorphism(
    const ExteriorElement& a, const std::vector<std::vector<la::Scalar>>& g) {
  const la::Field& f = a.field();
  int n = a.n();
  ExteriorElement out = ExteriorElement::zero(n, f);
  for (const auto& [u, c] : a.terms()) {
    ExteriorElement image = ExteriorElement::term(n, f, kOne, c);
    for (int i : support(u)) {
      ExteriorElement row = ExteriorElement::zero(n, f);
      for (int j = 0; j < n; ++j) {
        if (!f.is_zero(g[i - 1][j])) {
          row = row + ExteriorElement::term(
                          n, f, Monomial{1} << j, g[i - 1][j]);
        }
      }
      image = wedge(image, row);
      if (image.is_zero()) break;
    }
    out = out + image;
  }
  return out;
}

void check_invertible(int n, const la::Field& f,
                      const std::vector<std::vector<la::Scalar>>& g) {
  if (static_cast<int>(g.size()) != n) {
    throw std::invalid_argument("substitute: matrix must be n x n");
  }
  la::SparseMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g[i].size()) != n) {
      throw std::invalid_argument("substitute: matrix must be n x n");
    }
    for (int j = 0; j < n; ++j) m.set(i, j, g[i][j]);
  }
  if (la::rank(m) != n) {
    throw std::invalid_argument("substitute: singular matrix");
  }
}

}  // namespace

ExteriorElement substitute(const ExteriorElement& a,
                           const std::vector<std::vector<la::Scalar>>& g) {
  check_invertible(a.n(), a.field(), g);
  return apply_endomorphism(a, g);
}

std::vector<ExteriorElement> substitute_all(
    const std::vector<ExteriorElement>& elems,
    const std::vector<std::vector<la::Scalar>>& g) {
  std::vector<ExteriorElement> out;
  if (elems.empty()) return out;
  check_invertible(elems.front().n(), elems.front().field(), g);
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(apply_endomorphism(e, g));
  return out;
}

std::vector<Monomial> graded_basis(int n, int d, MonomialOrder order) {
  return graded_monomials(n, d, order);
}

std::string ExteriorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [u, c] : terms_) {
    std::string cs;
    bool negative = false;
    if (field_.is_prime_field()) {
      std::int64_t r = field_.residue(c);
      std::int64_t p = field_.characteristic();
      if (r > p / 2) {
        negative = true;
        r = p - r;
      }
      cs = std::to_string(r);
    } else {
      mpq_class q = std::get<mpq_class>(c);
      if (q < 0) {
        negative = true;
        q = -q;
      }
      cs = q.get_str();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (u == kOne) {
      out += cs;
    } else {
      if (cs != "1") out += cs;
      out += monomial_str(u);
    }
    first = false;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw std::invalid_argument("parse_element: expected integer at " +
                                  std::to_string(start) + " in '" + s + "'");
    }
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

ExteriorElement parse_element(int n, const la::Field& field,
                              const std::string& text) {
  Parser p{text};
  ExteriorElement out = ExteriorElement::zero(n, field);
  bool first = true;
  for (;;) {
    p.skip_ws();
    if (p.pos >= text.size()) break;
    bool negative = false;
    if (p.eat('+')) {
    } else if (p.eat('-')) {
      negative = true;
    } else if (!first) {
      throw std::invalid_argument("parse_element: expected '+' or '-' in '" +
                                  text + "'");
    }
    first = false;

    long long num = 1, den = 1;
    bool saw_coeff = false;
    if (p.peek_digit()) {
      num = p.integer();
      saw_coeff = true;
      if (p.eat('/')) den = p.integer();
    }
    p.eat('*');
    p.skip_ws();
    Monomial u = kOne;
    bool saw_monomial = false;
    if (p.pos < text.size() && text[p.pos] == 'e') {
      ++p.pos;
      if (!p.eat('[')) {
        throw std::invalid_argument("parse_element: expected '[' in '" + text +
                                    "'");
      }
      std::vector<int> idx;
      if (!p.eat(']')) {
        for (;;) {
          idx.push_back(static_cast<int>(p.integer()));
          if (p.eat(']')) break;
          if (!p.eat(',')) {
            throw std::invalid_argument("parse_element: expected ',' in '" +
                                        text + "'");
          }
        }
      }
      u = monomial_from_indices(n, idx);
      saw_monomial = true;
    }
    if (!saw_coeff && !saw_monomial) {
      throw std::invalid_argument("parse_element: empty term in '" + text +
                                  "'");
    }
    la::Scalar c = field.from_fraction(negative ? -num : num, den);
    out = out + ExteriorElement::term(n, field, u, c);
  }
  return out;
}

std::vector<std::vector<la::Scalar>> random_invertible_matrix(
    int n, const la::Field& field, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::vector<la::Scalar>> g(n,
                                           std::vector<la::Scalar>(n, field.zero()));
    la::SparseMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        g[i][j] = field.random(rng);
        m.set(i, j, g[i][j]);
      }
    }
    if (la::rank(m) == n) return g;
  }
  throw std::runtime_error("random_invertible_matrix: no invertible sample");
}

}  // namespace osforge::exterior
