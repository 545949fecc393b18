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

#ifndef SDT_DATASET_HPP_
#define SDT_DATASET_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sdt/strings.hpp"

namespace sdt {

// A finite duplicate-free collection of translation pairs <input, output>
// with a by-input multimap view. Inputs and outputs live over separate
// alphabets.
class Dataset {
 public:
  Dataset(Alphabet input_alphabet, Alphabet output_alphabet);

  const Alphabet& input_alphabet() const { return in_; }
  const Alphabet& output_alphabet() const { return out_; }

  // Inserts one pair; duplicates are ignored. Returns true when added.
  bool add(const Str& input, const Str& output);
  void merge(const Dataset& other);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // dom(D) in llex order.
  std::vector<Str> inputs() const;
  bool contains_input(const Str& x) const;
  bool contains(const Str& x, const Str& y) const;
  // Outputs paired with x, llex-sorted; empty when x is absent.
  const std::vector<Str>& outputs_of(const Str& x) const;
  // All pairs, sorted llex by input then output.
  std::vector<std::pair<Str, Str>> pairs() const;
  // ran(D): every output string, llex-sorted, unique.
  std::vector<Str> output_range() const;

  bool operator==(const Dataset& other) const;

 private:
  Alphabet in_;
  Alphabet out_;
  std::map<Str, std::vector<Str>, LlexLess> index_;
  std::size_t size_ = 0;
};

// One pair per line, "input<TAB>output" with '-' for lambda, llex-sorted;
// '#'-prefixed lines are comments.
std::string format_dataset(const Dataset& d);
Dataset parse_dataset(std::istream& in, const Alphabet& input_alphabet,
                      const Alphabet& output_alphabet);

}  // namespace sdt

#endif  // SDT_DATASET_HPP_
