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

// Compares the serial reference path against the OpenMP kernels on the two
// operations whose per-item work is independent: characteristic-sample
// construction and bounded equivalence.

#include <chrono>
#include <cstdio>
#include <vector>

#include "sdt/equivalence.hpp"
#include "sdt/parallel.hpp"
#include "sdt/sampler.hpp"

namespace {

double run_ms(bool parallel, const std::vector<sdt::Sdt>& machines,
              bool do_cs) {
  sdt::set_parallel(parallel);
  auto start = std::chrono::steady_clock::now();
  for (const sdt::Sdt& g : machines) {
    if (do_cs) {
      sdt::Dataset cs = sdt::characteristic_sample(g);
      (void)cs.size();
    } else {
      (void)sdt::bounded_equiv(g, g, 12);
    }
  }
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

int main() {
  std::vector<sdt::Sdt> machines;
  sdt::Alphabet in("ab"), out("AB");
  for (std::uint64_t seed = 1; machines.size() < 8; ++seed) {
    try {
      machines.push_back(sdt::random_sdt(4, in, out, 2, 2, seed));
    } catch (const sdt::Error&) {
    }
  }

  std::printf("%-24s %12s %12s\n", "operation", "serial ms", "parallel ms");
  for (bool do_cs : {true, false}) {
    // Warm-up pass so allocator effects do not skew the comparison.
    run_ms(false, machines, do_cs);
    double serial = run_ms(false, machines, do_cs);
    double parallel = run_ms(true, machines, do_cs);
    std::printf("%-24s %12.2f %12.2f\n",
                do_cs ? "characteristic_sample" : "bounded_equiv", serial,
                parallel);
  }
  sdt::set_parallel(true);
  return 0;
}
