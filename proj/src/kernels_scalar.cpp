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

#include "osforge/kernels.hpp"

namespace osforge::la {

void axpy_submul_scalar(std::int64_t* r, const std::int64_t* piv,
                        std::int64_t c, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) {
    r[j] -= c * piv[j];
  }
}

void axpy_submul_mod(std::int64_t* r, const std::int64_t* piv, std::int64_t c,
                     std::int64_t p, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) {
    std::int64_t v = r[j] - c * piv[j];
    v %= p;
    if (v < 0) v += p;
    r[j] = v;
  }
}

}  // namespace osforge::la
