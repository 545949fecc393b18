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

#include "sdt/dataset.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace sdt {

Dataset::Dataset(Alphabet input_alphabet, Alphabet output_alphabet)
    : in_(std::move(input_alphabet)),
      out_(std::move(output_alphabet)),
      index_(LlexLess{in_}) {}

bool Dataset::add(const Str& input, const Str& output) {
  in_.require_member(input);
  out_.require_member(output);
  auto it = index_.find(input);
  if (it == index_.end())
    it = index_.emplace(input, std::vector<Str>()).first;
  std::vector<Str>& outs = it->second;
  LlexLess less{out_};
  auto pos = std::lower_bound(outs.begin(), outs.end(), output, less);
  if (pos != outs.end() && *pos == output) return false;
  outs.insert(pos, output);
  ++size_;
  return true;
}

void Dataset::merge(const Dataset& other) {
  require_same_alphabet(in_, other.in_);
  require_same_alphabet(out_, other.out_);
  for (const auto& [x, ys] : other.index_)
    for (const Str& y : ys) add(x, y);
}

std::vector<Str> Dataset::inputs() const {
  std::vector<Str> out;
  out.reserve(index_.size());
  for (const auto& [x, ys] : index_) out.push_back(x);
  return out;
}

bool Dataset::contains_input(const Str& x) const {
  return index_.count(x) > 0;
}

bool Dataset::contains(const Str& x, const Str& y) const {
  auto it = index_.find(x);
  if (it == index_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), y,
                            LlexLess{out_});
}

const std::vector<Str>& Dataset::outputs_of(const Str& x) const {
  static const std::vector<Str> kEmpty;
  auto it = index_.find(x);
  return it == index_.end() ? kEmpty : it->second;
}

std::vector<std::pair<Str, Str>> Dataset::pairs() const {
  std::vector<std::pair<Str, Str>> out;
  out.reserve(size_);
  for (const auto& [x, ys] : index_)
    for (const Str& y : ys) out.emplace_back(x, y);
  return out;
}

std::vector<Str> Dataset::output_range() const {
  std::vector<Str> out;
  for (const auto& [x, ys] : index_) out.insert(out.end(), ys.begin(), ys.end());
  std::sort(out.begin(), out.end(), LlexLess{out_});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Dataset::operator==(const Dataset& other) const {
  return in_ == other.in_ && out_ == other.out_ && size_ == other.size_ &&
         std::equal(index_.begin(), index_.end(), other.index_.begin(),
                    other.index_.end(),
                    [](const auto& a, const auto& b) {
                      return a.first == b.first && a.second == b.second;
                    });
}

namespace {
std::string show(const Str& s) { return s.empty() ? "-" : s; }
}  // namespace

std::string format_dataset(const Dataset& d) {
  std::ostringstream out;
  for (const auto& [x, y] : d.pairs()) out << show(x) << '\t' << show(y) << '\n';
  return out.str();
}

Dataset parse_dataset(std::istream& in, const Alphabet& input_alphabet,
                      const Alphabet& output_alphabet) {
  Dataset d(input_alphabet, output_alphabet);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("expected 'input<TAB>output'", lineno);
    Str x = line.substr(0, tab);
    Str y = line.substr(tab + 1);
    if (x.empty() || y.empty())
      throw ParseError("empty field; use '-' for the empty string", lineno);
    if (x == "-") x.clear();
    if (y == "-") y.clear();
    try {
      d.add(x, y);
    } catch (const AlphabetError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return d;
}

}  // namespace sdt
