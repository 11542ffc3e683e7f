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

#ifndef OSFORGE_JSON_IO_HPP
#define OSFORGE_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "osforge/exterior.hpp"
#include "osforge/matroid.hpp"

namespace osforge::io {

// Insertion-ordered JSON keeps the output byte-stable for a fixed input.
using json = nlohmann::ordered_json;

// {"n": int, "circuits": [[int,...],...]} with 1-based indices.
matroid::Matroid matroid_from_json(const json& j);
json matroid_to_json(const matroid::Matroid& m);

// "U(2,3)", "uniform(2,3)", and '+' for direct sums: "U(2,3)+U(1,1)".
matroid::Matroid parse_matroid_expression(const std::string& text);

// Accepts a file path, an inline JSON object, or a constructor expression.
matroid::Matroid load_matroid(const std::string& arg);

struct IdealInput {
  int n;
  std::vector<exterior::ExteriorElement> generators;
};

// {"n": int, "generators": [...]} where each generator is either an index
// array [1,2] (a monomial) or an element string "e[1,2]-e[1,3]".
IdealInput ideal_from_json(const json& j, const la::Field& field);
IdealInput load_ideal(const std::string& arg, const la::Field& field);

}  // namespace osforge::io

#endif  // OSFORGE_JSON_IO_HPP
