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

#ifndef SDT_ANTICHAIN_HPP_
#define SDT_ANTICHAIN_HPP_

#include <vector>

#include "sdt/strings.hpp"

namespace sdt {

// True when the members of p are pairwise incomparable (a prefix code).
bool is_antichain(const StringSet& p);

// p is a maximal antichain of s: p lies inside T[s], is pairwise
// incomparable, and every member of s is comparable to some member of p.
bool is_maximal_antichain(const StringSet& p, const StringSet& s);

// p is a valid antichain of s: maximal, every member of s *extends* some
// member of p, and all members of p carry identical suffix sets of s.
// On prefix-free s this is the usual residual-tree condition; the stronger
// form keeps product(p, left_quotient(p, s)) == s on arbitrary finite s.
bool is_valid_antichain(const StringSet& p, const StringSet& s);

// The antichain order: |p| < |q|, or |p| == |q| and every comparable pair
// (x in p, y in q) has x a strict prefix of y. Irreflexive.
bool ac_less(const StringSet& p, const StringSet& q);

// All valid antichains of s in ascending ac order. The first element is
// always {lambda}; the last is s itself exactly when s is an antichain.
std::vector<StringSet> valid_antichains(const StringSet& s);

// The unique maximal factorization: each factor is the ac-least non-trivial
// valid antichain of the running quotient. {lambda} factors to [{lambda}];
// an irreducible remainder (possible only for non-prefix-free s) is emitted
// as the final factor.
std::vector<StringSet> maximal_factorization(const StringSet& s);

}  // namespace sdt

#endif  // SDT_ANTICHAIN_HPP_
