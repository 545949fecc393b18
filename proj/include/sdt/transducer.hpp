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

#ifndef SDT_TRANSDUCER_HPP_
#define SDT_TRANSDUCER_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdt/dataset.hpp"
#include "sdt/strings.hpp"

namespace sdt {

using StateId = std::int32_t;

inline constexpr std::size_t kDefaultPairCap = 100000;

struct Transition {
  StateId target;
  StringSet output;  // finite non-empty antichain over the output alphabet
};

// A semi-deterministic transducer: input-deterministic state graph whose
// edges carry prefix-free output sets. Acceptance is a #-transition back to
// the initial state; only its output set is stored.
class Sdt {
 public:
  Sdt(Alphabet input_alphabet, Alphabet output_alphabet);

  StateId add_state();
  void set_initial(StateId q);
  // Throws on a duplicate (state, symbol) slot: input determinism is a
  // representation invariant, not a validate() finding.
  void add_transition(StateId from, char symbol, StateId to, StringSet output);
  void set_accept(StateId q, StringSet output);

  const Alphabet& input_alphabet() const { return in_; }
  const Alphabet& output_alphabet() const { return out_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  StateId initial() const { return initial_; }
  const std::map<char, Transition>& transitions_from(StateId q) const;
  // nullptr when q has no #-transition.
  const StringSet* accept(StateId q) const;
  std::optional<StateId> delta(StateId q, char symbol) const;

  int edge_count() const;         // input transitions plus #-transitions
  std::size_t output_weight() const;  // total symbols + members across outputs

 private:
  struct State {
    std::map<char, Transition> out;
    std::optional<StringSet> accept;
  };
  void check_state(StateId q) const;
  Alphabet in_;
  Alphabet out_;
  std::vector<State> states_;
  StateId initial_ = 0;
};

// Empty result means the machine satisfies every SDT invariant, including
// trimness. Each violation names the offending state or transition.
std::vector<std::string> validate(const Sdt& g);
inline bool is_valid(const Sdt& g) { return validate(g).empty(); }

struct Path {
  std::vector<std::pair<StateId, char>> steps;  // (source state, symbol)
  StateId end = 0;
  bool accepted = false;  // ends with a #-transition
  std::size_t length() const { return steps.size() + (accepted ? 1 : 0); }
};

// The unique path labeled x, with the #-transition appended when x is
// accepted; nullopt when some symbol has no transition.
std::optional<Path> path_of(const Sdt& g, const Str& x);

// Product of the output sets along the non-# transitions of p_x;
// {lambda} for the empty string. nullopt when the path is missing.
std::optional<StringSet> path_output(const Sdt& g, const Str& x);

// The llex-least member of path_output(g, x), computed edge-wise without
// enumerating the product. Requires the path to exist.
Str least_path_output(const Sdt& g, const Str& x);

// f(x): path_output * accept set, nullopt when x is not in the domain.
std::optional<StringSet> translate(const Sdt& g, const Str& x,
                                   std::size_t cap = kDefaultPairCap);

// y in f(x), decided by greedy prefix-code matching along the path.
bool contains_translation(const Sdt& g, const Str& x, const Str& y);

bool in_domain(const Sdt& g, const Str& x);

// The llex-least accepted extension of x; nullopt when none exists.
std::optional<Str> least_completion(const Sdt& g, const Str& x);

// All pairs <x, y> with |x| <= max_len, in llex order. Throws
// PairCapExceeded when the total pair count would exceed the cap.
Dataset enumerate_pairs(const Sdt& g, int max_len,
                        std::size_t pair_cap = kDefaultPairCap);

// Restriction to states that are reachable and co-reachable, relabeled in
// breadth-first llex order. Throws when the domain becomes empty.
Sdt trimmed(const Sdt& g);

// llex-least access string per state; index is the state id.
std::vector<Str> min_access_strings(const Sdt& g);

// A validated trim machine drawn deterministically from the seed.
Sdt random_sdt(int n_states, const Alphabet& input_alphabet,
               const Alphabet& output_alphabet, int max_out_len,
               int max_out_set, std::uint64_t seed);

// DOT rendering; accepting states get doubled borders annotated with the
// accept output set.
std::string to_dot(const Sdt& g);

// One directive per line: inalpha/outalpha/states/initial/trans/accept.
std::string format_sdt(const Sdt& g);
Sdt parse_sdt(std::istream& in);

}  // namespace sdt

#endif  // SDT_TRANSDUCER_HPP_
