// Copyright 2026 The libsdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDT_PARALLEL_HPP_
#define SDT_PARALLEL_HPP_

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace sdt {

// Process-wide switch between the OpenMP kernels and the serial reference
// path. Results must be identical either way; tests compare the two.
bool parallel_enabled();
void set_parallel(bool on);

// Runs f(i) for i in [0, n). With parallelism on, iterations run unordered
// across threads; f must only touch index-local state.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
#if defined(_OPENMP)
  if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace sdt

#endif  // SDT_PARALLEL_HPP_
