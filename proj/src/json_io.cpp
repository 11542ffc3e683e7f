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

#include "osforge/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace osforge::io {

using matroid::Matroid;

matroid::Matroid matroid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("circuits")) {
    throw std::invalid_argument(
        "matroid JSON must be {\"n\": int, \"circuits\": [[int,...],...]}");
  }
  int n = j.at("n").get<int>();
  std::vector<std::vector<int>> circuits;
  for (const auto& c : j.at("circuits")) {
    circuits.push_back(c.get<std::vector<int>>());
  }
  return Matroid::from_circuits(n, circuits);
}

json matroid_to_json(const Matroid& m) {
  json out;
  out["n"] = m.n();
  out["circuits"] = m.circuit_lists();
  return out;
}

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw std::invalid_argument("matroid expression: expected integer in '" +
                                  s + "'");
    }
    return std::stoi(s.substr(start, pos - start));
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) {
      throw std::invalid_argument(std::string("matroid expression: expected '") +
                                  c + "' in '" + s + "'");
    }
    ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Matroid term() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    std::string word = s.substr(start, pos - start);
    for (auto& ch : word) ch = static_cast<char>(std::tolower(ch));
    if (word != "u" && word != "uniform") {
      throw std::invalid_argument(
          "matroid expression: unknown constructor '" + word + "' in '" + s +
          "'");
    }
    expect('(');
    int m = integer();
    expect(',');
    int n = integer();
    expect(')');
    return Matroid::uniform(m, n);
  }

  Matroid expression() {
    Matroid out = term();
    while (eat('+')) {
      out = Matroid::direct_sum(out, term());
    }
    skip_ws();
    if (pos != s.size()) {
      throw std::invalid_argument("matroid expression: trailing input in '" +
                                  s + "'");
    }
    return out;
  }
};

}  // namespace

Matroid parse_matroid_expression(const std::string& text) {
  ExprParser p{text};
  return p.expression();
}

Matroid load_matroid(const std::string& arg) {
  std::string trimmed = arg;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.erase(trimmed.begin());
  }
  if (!trimmed.empty() && trimmed.front() == '{') {
    return matroid_from_json(json::parse(trimmed));
  }
  if (trimmed.find('(') != std::string::npos) {
    return parse_matroid_expression(trimmed);
  }
  std::ifstream in(trimmed);
  if (!in) {
    throw std::invalid_argument("cannot open matroid file: " + trimmed);
  }
  json j;
  in >> j;
  return matroid_from_json(j);
}

IdealInput ideal_from_json(const json& j, const la::Field& field) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
    throw std::invalid_argument(
        "ideal JSON must be {\"n\": int, \"generators\": [...]}");
  }
  IdealInput out{j.at("n").get<int>(), {}};
  for (const auto& g : j.at("generators")) {
    if (g.is_array()) {
      auto idx = g.get<std::vector<int>>();
      out.generators.push_back(exterior::ExteriorElement::term(
          out.n, field, exterior::monomial_from_indices(out.n, idx),
          field.one()));
    } else if (g.is_string()) {
      out.generators.push_back(
          exterior::parse_element(out.n, field, g.get<std::string>()));
    } else {
      throw std::invalid_argument(
          "ideal generators must be index arrays or element strings");
    }
  }
  return out;
}

IdealInput load_ideal(const std::string& arg, const la::Field& field) {
  std::string trimmed = arg;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.erase(trimmed.begin());
  }
  if (!trimmed.empty() && trimmed.front() == '{') {
    return ideal_from_json(json::parse(trimmed), field);
  }
  std::ifstream in(trimmed);
  if (!in) {
    throw std::invalid_argument("cannot open ideal file: " + trimmed);
  }
  json j;
  in >> j;
  return ideal_from_json(j, field);
}

}  // namespace osforge::io
