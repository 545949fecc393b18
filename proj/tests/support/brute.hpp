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

// Brute-force oracles, kept independent of the library's implementation
// paths: antichain enumeration recurses over the prefix tree, and
// translation membership enumerates raw concatenations.

#ifndef SDT_TESTS_SUPPORT_BRUTE_HPP_
#define SDT_TESTS_SUPPORT_BRUTE_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdt/antichain.hpp"
#include "sdt/strings.hpp"
#include "sdt/transducer.hpp"

namespace brute {

// All maximal antichains of s: every subtree is covered either by its root
// or by covers of all of its children.
inline std::vector<std::vector<sdt::Str>> maximal_antichains(
    const sdt::StringSet& s) {
  sdt::PrefixTree tree(s);

  struct Rec {
    const sdt::PrefixTree& tree;
    const sdt::Alphabet& alpha;
    std::vector<std::vector<sdt::Str>> operator()(const sdt::Str& v) const {
      std::vector<std::vector<sdt::Str>> result{{v}};
      std::vector<sdt::Str> children;
      for (char c : alpha.symbols())
        if (tree.is_node(v + c)) children.push_back(v + c);
      if (children.empty()) return result;
      std::vector<std::vector<sdt::Str>> combos{{}};
      for (const sdt::Str& child : children) {
        std::vector<std::vector<sdt::Str>> expanded;
        for (const auto& head : combos)
          for (const auto& tail : (*this)(child)) {
            std::vector<sdt::Str> merged = head;
            merged.insert(merged.end(), tail.begin(), tail.end());
            expanded.push_back(std::move(merged));
          }
        combos = std::move(expanded);
      }
      result.insert(result.end(), combos.begin(), combos.end());
      return result;
    }
  };
  return Rec{tree, s.alphabet()}(sdt::Str());
}

// Definitional validity: every member of s extends a member of p, and all
// members of p see the same suffixes of s.
inline bool valid_by_definition(const std::vector<sdt::Str>& p,
                                const sdt::StringSet& s) {
  for (const sdt::Str& m : s.members()) {
    bool covered = false;
    for (const sdt::Str& x : p)
      if (sdt::is_prefix(x, m)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  auto suffixes = [&s](const sdt::Str& x) {
    std::set<sdt::Str> out;
    for (const sdt::Str& m : s.members())
      if (sdt::is_prefix(x, m)) out.insert(m.substr(x.size()));
    return out;
  };
  const std::set<sdt::Str> want = suffixes(p.front());
  for (std::size_t i = 1; i < p.size(); ++i)
    if (suffixes(p[i]) != want) return false;
  return true;
}

inline std::vector<sdt::StringSet> valid_antichains(const sdt::StringSet& s) {
  std::vector<sdt::StringSet> out;
  for (const auto& p : maximal_antichains(s)) {
    if (!valid_by_definition(p, s)) continue;
    sdt::StringSet set(s.alphabet(), p);
    if (std::find(out.begin(), out.end(), set) == out.end())
      out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(),
            [](const sdt::StringSet& a, const sdt::StringSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.members() < b.members();
            });
  return out;
}

// f(x) enumerated by raw concatenation, no product() involved.
inline std::optional<std::set<sdt::Str>> translate(const sdt::Sdt& g,
                                                   const sdt::Str& x) {
  std::vector<const sdt::StringSet*> slots;
  sdt::StateId q = g.initial();
  for (char c : x) {
    const auto& out = g.transitions_from(q);
    auto it = out.find(c);
    if (it == out.end()) return std::nullopt;
    slots.push_back(&it->second.output);
    q = it->second.target;
  }
  const sdt::StringSet* acc = g.accept(q);
  if (!acc) return std::nullopt;
  slots.push_back(acc);
  std::set<sdt::Str> result{sdt::Str()};
  for (const sdt::StringSet* slot : slots) {
    std::set<sdt::Str> next;
    for (const sdt::Str& head : result)
      for (const sdt::Str& w : slot->members()) next.insert(head + w);
    result = std::move(next);
  }
  return result;
}

// Random string sets; lengths 0..max_len over the first alpha_size symbols.
inline sdt::StringSet random_set(std::mt19937_64& rng, int alpha_size,
                                 int max_strings, int max_len) {
  static const std::string kSymbols = "abc";
  sdt::Alphabet alpha(kSymbols.substr(0, alpha_size));
  int n = 1 + static_cast<int>(rng() % max_strings);
  std::vector<sdt::Str> members;
  for (int i = 0; i < n; ++i) {
    int len = static_cast<int>(rng() % (max_len + 1));
    sdt::Str s;
    for (int j = 0; j < len; ++j)
      s += kSymbols[rng() % alpha_size];
    members.push_back(std::move(s));
  }
  return sdt::StringSet(alpha, std::move(members));
}

// Random non-empty antichains (prefix-comparable draws are discarded).
inline sdt::StringSet random_antichain_set(std::mt19937_64& rng,
                                           int alpha_size, int max_strings,
                                           int max_len) {
  static const std::string kSymbols = "abc";
  sdt::Alphabet alpha(kSymbols.substr(0, alpha_size));
  int n = 1 + static_cast<int>(rng() % max_strings);
  std::vector<sdt::Str> members;
  for (int i = 0; i < 4 * n && static_cast<int>(members.size()) < n; ++i) {
    int len = static_cast<int>(rng() % (max_len + 1));
    sdt::Str s;
    for (int j = 0; j < len; ++j)
      s += kSymbols[rng() % alpha_size];
    bool ok = true;
    for (const sdt::Str& m : members)
      if (sdt::comparable(m, s)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(std::move(s));
  }
  return sdt::StringSet(alpha, std::move(members));
}

}  // namespace brute

#endif  // SDT_TESTS_SUPPORT_BRUTE_HPP_
