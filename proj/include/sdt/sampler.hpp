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

#ifndef SDT_SAMPLER_HPP_
#define SDT_SAMPLER_HPP_

#include "sdt/dataset.hpp"
#include "sdt/transducer.hpp"

namespace sdt {

struct SamplerOptions {
  // Depth of the bounded future quantifications; <= 0 derives the default
  // 2 * |states| + max output length + 2.
  int future_bound = 0;
  // Guard on enumerated translation sets; exceeding it raises
  // SearchBoundExceeded.
  std::size_t cap = kDefaultPairCap;
};

// Anchor pairs plus witnesses eliminating least-translation prefixes that
// lie in no valid antichain of the quotient translations.
Dataset n0(const Sdt& g, const SamplerOptions& options = {});

// One llex-least pair per valid antichain of f(x-hat) that is not valid
// for every bounded future tree.
Dataset n1(const Sdt& g, const SamplerOptions& options = {});

// State-distinguishing pairs for every minimal access string and one-symbol
// extension, plus one full translation per output of every transition.
Dataset n2(const Sdt& g, const SamplerOptions& options = {});

// CS = n0 + n1 + n2.
Dataset characteristic_sample(const Sdt& g, const SamplerOptions& options = {});

int default_future_bound(const Sdt& g);

}  // namespace sdt

#endif  // SDT_SAMPLER_HPP_
