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

#ifndef OSFORGE_KERNELS_HPP
#define OSFORGE_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace osforge::la {

// Row update kernels for dense mod-p elimination.
//
// The elimination keeps non-pivot rows in a lazy (unreduced) int64
// representation and subtracts multiples of canonical pivot rows:
//
//   r[j] -= c * piv[j]   with  0 <= piv[j] < p  and  0 <= c < p.
//
// Values stay exact as long as p^2 * (pivots + 1) fits in int64; the caller
// checks that bound and falls back to axpy_submul_mod otherwise.
using AxpyFn = void (*)(std::int64_t* r, const std::int64_t* piv,
                        std::int64_t c, std::size_t len);

void axpy_submul_scalar(std::int64_t* r, const std::int64_t* piv,
                        std::int64_t c, std::size_t len);

#if defined(__x86_64__) || defined(__i386__)
// AVX2 variant; requires piv[j] and c below 2^31 (low 32 bits of each lane).
void axpy_submul_avx2(std::int64_t* r, const std::int64_t* piv,
                      std::int64_t c, std::size_t len);
#endif

// Eager variant: every touched entry is reduced into [0, p) immediately.
// Used for primes too large for the lazy bound. Scalar only.
void axpy_submul_mod(std::int64_t* r, const std::int64_t* piv, std::int64_t c,
                     std::int64_t p, std::size_t len);

// Picks the fastest lazy kernel supported by the running CPU.
AxpyFn select_axpy();

// Name of the kernel select_axpy() returns ("scalar" or "avx2").
const char* axpy_kernel_name();

}  // namespace osforge::la

#endif  // OSFORGE_KERNELS_HPP
