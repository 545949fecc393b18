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

#include "sdt/strings.hpp"

#include <algorithm>
#include <set>

namespace sdt {

PrefixRel prefix_rel(const Str& x, const Str& y) noexcept {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) return PrefixRel::kIncomparable;
  }
  if (x.size() == y.size()) return PrefixRel::kEqual;
  return x.size() < y.size() ? PrefixRel::kStrictPrefix
                             : PrefixRel::kStrictExtension;
}

Str truncated(const Str& x) {
  if (x.empty()) throw Error("truncate is undefined for the empty string");
  return x.substr(0, x.size() - 1);
}

Alphabet::Alphabet() { rank_.fill(-1); }

Alphabet::Alphabet(std::string_view symbols) {
  rank_.fill(-1);
  if (symbols.empty()) throw AlphabetError("alphabet must be non-empty");
  for (char c : symbols) {
    if (c == '#') throw AlphabetError("'#' is reserved as the end marker");
    if (rank_[byte(c)] >= 0)
      throw AlphabetError(std::string("duplicate symbol '") + c + "'");
    rank_[byte(c)] = static_cast<std::int16_t>(symbols_.size());
    symbols_.push_back(c);
  }
}

bool Alphabet::contains_all(const Str& x) const {
  return std::all_of(x.begin(), x.end(), [&](char c) { return contains(c); });
}

int Alphabet::rank(char c) const {
  int r = rank_[byte(c)];
  if (r < 0)
    throw AlphabetError(std::string("symbol '") + c +
                        "' is not in alphabet \"" + symbols_ + "\"");
  return r;
}

void Alphabet::require_member(const Str& x) const {
  for (char c : x) rank(c);
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (a != b)
    throw AlphabetError("alphabet mismatch: \"" + a.symbols() + "\" vs \"" +
                        b.symbols() + "\"");
}

int lex_cmp(const Alphabet& a, const Str& x, const Str& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int rx = a.rank(x[i]);
    int ry = a.rank(y[i]);
    if (rx != ry) return rx < ry ? -1 : 1;
  }
  a.require_member(x.substr(n));
  a.require_member(y.substr(n));
  if (x.size() == y.size()) return 0;
  return x.size() < y.size() ? -1 : 1;
}

int llex_cmp(const Alphabet& a, const Str& x, const Str& y) {
  if (x.size() != y.size()) {
    a.require_member(x);
    a.require_member(y);
    return x.size() < y.size() ? -1 : 1;
  }
  return lex_cmp(a, x, y);
}

StringSet::StringSet(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

StringSet::StringSet(Alphabet alphabet, std::vector<Str> members)
    : alphabet_(std::move(alphabet)), members_(std::move(members)) {
  for (const Str& m : members_) alphabet_.require_member(m);
  std::sort(members_.begin(), members_.end(), LlexLess{alphabet_});
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool StringSet::contains(const Str& x) const {
  return std::binary_search(members_.begin(), members_.end(), x,
                            LlexLess{alphabet_});
}

const Str& StringSet::llex_least() const {
  if (members_.empty()) throw Error("llex_least of an empty set");
  return members_.front();
}

StringSet StringSet::parse(const Alphabet& alphabet, std::string_view text) {
  std::vector<Str> members;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    if (tok.empty()) throw Error("empty element in string set literal");
    members.push_back(tok == "-" ? Str() : Str(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return StringSet(alphabet, std::move(members));
}

std::string StringSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += members_[i].empty() ? "-" : members_[i];
  }
  return out;
}

StringSet product(const StringSet& p, const StringSet& s) {
  require_same_alphabet(p.alphabet(), s.alphabet());
  std::vector<Str> out;
  out.reserve(p.size() * s.size());
  for (const Str& x : p.members())
    for (const Str& y : s.members()) out.push_back(x + y);
  return StringSet(p.alphabet(), std::move(out));
}

StringSet left_quotient(const StringSet& p, const StringSet& s) {
  require_same_alphabet(p.alphabet(), s.alphabet());
  std::vector<Str> out;
  for (const Str& x : p.members())
    for (const Str& y : s.members())
      if (is_prefix(x, y)) out.push_back(y.substr(x.size()));
  return StringSet(p.alphabet(), std::move(out));
}

PrefixTree::PrefixTree(const StringSet& s)
    : alphabet_(s.alphabet()), members_(s.members()) {
  std::set<Str> nodes;
  for (const Str& m : members_)
    for (std::size_t k = 0; k <= m.size(); ++k) nodes.insert(m.substr(0, k));
  nodes_.assign(nodes.begin(), nodes.end());
  std::sort(nodes_.begin(), nodes_.end(), LlexLess{alphabet_});
}

bool PrefixTree::is_node(const Str& x) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), x,
                            LlexLess{alphabet_});
}

bool PrefixTree::is_member(const Str& x) const {
  return std::binary_search(members_.begin(), members_.end(), x,
                            LlexLess{alphabet_});
}

std::vector<Str> PrefixTree::member_suffixes(const Str& x) const {
  std::vector<Str> out;
  for (const Str& m : members_)
    if (is_prefix(x, m)) out.push_back(m.substr(x.size()));
  return out;
}

std::vector<Str> PrefixTree::subtree(const Str& x) const {
  std::vector<Str> out;
  for (const Str& n : nodes_)
    if (is_prefix(x, n)) out.push_back(n.substr(x.size()));
  return out;
}

}  // namespace sdt
