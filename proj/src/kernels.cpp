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

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(__i386__)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

AxpyFn select_axpy() {
#if defined(__x86_64__) || defined(__i386__)
  if (cpu_has_avx2()) return &axpy_submul_avx2;
#endif
  return &axpy_submul_scalar;
}

const char* axpy_kernel_name() {
#if defined(__x86_64__) || defined(__i386__)
  if (cpu_has_avx2()) return "avx2";
#endif
  return "scalar";
}

}  // namespace osforge::la
