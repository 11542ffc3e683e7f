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

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace osforge::la {

// Pivot rows are canonical (entries in [0, p), p < 2^31), so the low 32 bits
// of each 64-bit lane carry the full value and _mm256_mul_epu32 yields the
// exact 64-bit product.
void axpy_submul_avx2(std::int64_t* r, const std::int64_t* piv,
                      std::int64_t c, std::size_t len) {
  const __m256i cv = _mm256_set1_epi64x(c);
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    __m256i p4 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(piv + j));
    __m256i r4 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + j));
    r4 = _mm256_sub_epi64(r4, _mm256_mul_epu32(p4, cv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + j), r4);
  }
  for (; j < len; ++j) {
    r[j] -= c * piv[j];
  }
}

}  // namespace osforge::la

#endif
