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

#ifndef SDT_STRINGS_HPP_
#define SDT_STRINGS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdt/error.hpp"

namespace sdt {

// A string over some alphabet. The empty string stands for lambda.
using Str = std::string;

enum class PrefixRel { kEqual, kStrictPrefix, kStrictExtension, kIncomparable };

// Relation of x to y under the prefix order.
PrefixRel prefix_rel(const Str& x, const Str& y) noexcept;

inline bool comparable(const Str& x, const Str& y) noexcept {
  return prefix_rel(x, y) != PrefixRel::kIncomparable;
}
inline bool is_prefix(const Str& x, const Str& y) noexcept {
  PrefixRel r = prefix_rel(x, y);
  return r == PrefixRel::kEqual || r == PrefixRel::kStrictPrefix;
}
inline bool is_strict_prefix(const Str& x, const Str& y) noexcept {
  return prefix_rel(x, y) == PrefixRel::kStrictPrefix;
}

// x with its last symbol dropped. Defined only for |x| >= 1.
Str truncated(const Str& x);

// Ordered inventory of symbols. The declaration order is the lexicographic
// base order. '#' is reserved as the end marker and never admitted.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  bool contains(char c) const { return rank_[byte(c)] >= 0; }
  bool contains_all(const Str& x) const;
  // Position of c in the declaration order; throws when c is foreign.
  int rank(char c) const;
  void require_member(const Str& x) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  static std::size_t byte(char c) { return static_cast<unsigned char>(c); }
  std::string symbols_;
  std::array<std::int16_t, 256> rank_;
};

// Raises AlphabetError unless both alphabets are identical.
void require_same_alphabet(const Alphabet& a, const Alphabet& b);

// Three-way comparisons; every symbol must belong to the alphabet.
int lex_cmp(const Alphabet& a, const Str& x, const Str& y);
// Length first, then lexicographic.
int llex_cmp(const Alphabet& a, const Str& x, const Str& y);

inline bool llex_less(const Alphabet& a, const Str& x, const Str& y) {
  return llex_cmp(a, x, y) < 0;
}

// Strict weak order usable with standard containers and algorithms.
struct LlexLess {
  Alphabet alphabet;
  bool operator()(const Str& x, const Str& y) const {
    return llex_cmp(alphabet, x, y) < 0;
  }
};

// A finite duplicate-free set of strings over one alphabet. Members are kept
// in llex order, which fixes serialization and tie-breaking everywhere.
class StringSet {
 public:
  explicit StringSet(Alphabet alphabet);
  StringSet(Alphabet alphabet, std::vector<Str> members);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Str>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Str& x) const;
  const Str& llex_least() const;  // throws on empty

  bool operator==(const StringSet& other) const {
    return alphabet_ == other.alphabet_ && members_ == other.members_;
  }
  bool operator!=(const StringSet& other) const { return !(*this == other); }

  // Parses the literal syntax "x,y,z" with '-' for lambda.
  static StringSet parse(const Alphabet& alphabet, std::string_view text);
  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::vector<Str> members_;  // llex-sorted, unique
};

// {xy : x in p, y in s}.
StringSet product(const StringSet& p, const StringSet& s);
// {y : some x in p has xy in s}.
StringSet left_quotient(const StringSet& p, const StringSet& s);

// The prefix closure T[S] with the members of S marked.
class PrefixTree {
 public:
  explicit PrefixTree(const StringSet& s);

  const Alphabet& alphabet() const { return alphabet_; }
  // Nodes of T[S] in llex order.
  const std::vector<Str>& nodes() const { return nodes_; }
  bool is_node(const Str& x) const;
  bool is_member(const Str& x) const;
  // S_x = {z : xz in S}: the suffixes of members behind x.
  std::vector<Str> member_suffixes(const Str& x) const;
  // T[S]_x as a set of strings.
  std::vector<Str> subtree(const Str& x) const;

 private:
  Alphabet alphabet_;
  std::vector<Str> nodes_;    // llex-sorted
  std::vector<Str> members_;  // llex-sorted
};

}  // namespace sdt

#endif  // SDT_STRINGS_HPP_
