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

#include "sdt/antichain.hpp"

#include <algorithm>

namespace sdt {

namespace {

void require_non_empty(const StringSet& s, const char* op) {
  if (s.empty()) throw Error(std::string(op) + ": empty set is not supported");
}

bool covers_downward(const std::vector<Str>& p, const StringSet& s) {
  for (const Str& m : s.members()) {
    bool hit = false;
    for (const Str& x : p) {
      if (is_prefix(x, m)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool is_antichain(const StringSet& p) {
  const auto& m = p.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (comparable(m[i], m[j])) return false;
  return true;
}

bool is_maximal_antichain(const StringSet& p, const StringSet& s) {
  require_same_alphabet(p.alphabet(), s.alphabet());
  require_non_empty(s, "is_maximal_antichain");
  if (!is_antichain(p)) return false;
  // p inside T[s]: every member is a prefix of some member of s.
  for (const Str& x : p.members()) {
    bool in_tree = false;
    for (const Str& m : s.members()) {
      if (is_prefix(x, m)) {
        in_tree = true;
        break;
      }
    }
    if (!in_tree) return false;
  }
  // Every member of s comparable to some member of p.
  for (const Str& m : s.members()) {
    bool hit = false;
    for (const Str& x : p.members()) {
      if (comparable(x, m)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_valid_antichain(const StringSet& p, const StringSet& s) {
  if (!is_maximal_antichain(p, s)) return false;
  if (!covers_downward(p.members(), s)) return false;
  PrefixTree tree(s);
  const std::vector<Str> want = tree.member_suffixes(p.members().front());
  for (std::size_t i = 1; i < p.size(); ++i)
    if (tree.member_suffixes(p.members()[i]) != want) return false;
  return true;
}

bool ac_less(const StringSet& p, const StringSet& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());
  if (p.size() != q.size()) return p.size() < q.size();
  for (const Str& x : p.members())
    for (const Str& y : q.members())
      if (comparable(x, y) && !is_strict_prefix(x, y)) return false;
  return true;
}

std::vector<StringSet> valid_antichains(const StringSet& s) {
  require_non_empty(s, "valid_antichains");
  PrefixTree tree(s);
  const Str& least = s.llex_least();

  // Every valid antichain holds exactly one prefix of the llex-least member,
  // and equal suffix sets determine the rest of it uniquely.
  std::vector<StringSet> out;
  for (std::size_t k = 0; k <= least.size(); ++k) {
    const Str seed = least.substr(0, k);
    const std::vector<Str> want = tree.member_suffixes(seed);
    std::vector<Str> candidate;
    for (const Str& node : tree.nodes())
      if (tree.member_suffixes(node) == want) candidate.push_back(node);
    if (!covers_downward(candidate, s)) continue;
    out.emplace_back(s.alphabet(), std::move(candidate));
  }
  std::sort(out.begin(), out.end(), [](const StringSet& a, const StringSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (ac_less(a, b)) return true;
    if (ac_less(b, a)) return false;
    return a.members() < b.members();
  });
  return out;
}

std::vector<StringSet> maximal_factorization(const StringSet& s) {
  require_non_empty(s, "maximal_factorization");
  const StringSet lambda_only(s.alphabet(), {Str()});
  if (s == lambda_only) return {lambda_only};

  std::vector<StringSet> factors;
  StringSet cur = s;
  while (true) {
    std::vector<StringSet> vac = valid_antichains(cur);
    if (vac.size() == 1) {
      // No non-trivial valid antichain; cur cannot be split further.
      factors.push_back(cur);
      break;
    }
    const StringSet& p = vac[1];
    if (p == cur) {
      factors.push_back(cur);
      break;
    }
    factors.push_back(p);
    cur = left_quotient(p, cur);
    if (cur == lambda_only) break;
  }
  return factors;
}

}  // namespace sdt
