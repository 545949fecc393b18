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

#ifndef SDT_EQUIVALENCE_HPP_
#define SDT_EQUIVALENCE_HPP_

#include <optional>

#include "sdt/transducer.hpp"

namespace sdt {

// Structural identity up to state renaming: the pairing grown from the two
// initial states must be total, bijective, and preserve every output set.
bool isomorphic(const Sdt& g1, const Sdt& g2);

struct EquivResult {
  bool equivalent = false;
  Str counterexample;  // llex-least differing input when not equivalent
};

// Exact agreement of domain membership and translation sets on every input
// of length <= depth.
EquivResult bounded_equiv(const Sdt& g1, const Sdt& g2, int depth,
                          std::size_t cap = kDefaultPairCap);

// Conservative surrogate for the bounded-future depth:
// |states1| + |states2| + max output length + 2.
int default_equiv_depth(const Sdt& g1, const Sdt& g2);

struct CanonicalReport {
  Sdt machine;
  int rounds = 0;    // enumeration depths tried
  bool stable = false;
};

// Learns the machine back from its own enumerated pairs at growing depths
// until two successive hypotheses are isomorphic and bounded-equivalent to
// the input. Throws NonConvergence after max_rounds depth increments.
CanonicalReport canonicalize(const Sdt& g, int max_rounds = 16,
                             std::size_t cap = kDefaultPairCap);

}  // namespace sdt

#endif  // SDT_EQUIVALENCE_HPP_
