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

#ifndef SDT_LEARNER_HPP_
#define SDT_LEARNER_HPP_

#include <map>
#include <optional>
#include <vector>

#include "sdt/dataset.hpp"
#include "sdt/oracle.hpp"
#include "sdt/transducer.hpp"

namespace sdt {

// The state-merging learner's working machine: tree-like below every
// unprocessed state, with a growing core of fixed red states.
class Hypothesis {
 public:
  // Builds the initial tree-like transducer: one state per member of
  // T[dom(D)], internal edges outputting {lambda}, the outputs of D on the
  // #-transitions. Throws on an empty dataset.
  explicit Hypothesis(const Dataset& d);

  const Alphabet& input_alphabet() const { return in_; }
  const Alphabet& output_alphabet() const { return out_; }

  // Follows input symbols from the root; -1 when no such state.
  int node_at(const Str& x) const;
  bool is_red(const Str& x) const;
  void set_red(const Str& x);
  // Access strings of red states in promotion order.
  const std::vector<Str>& red_access() const { return red_; }
  // Non-red states whose parent state is red, llex order of access strings.
  std::vector<Str> frontier() const;

  // X_l: llex-least member of the output product along the path of x.
  Str least_output_prefix(const Str& x) const;
  // The unique member of the path product that prefixes y, when y
  // decomposes greedily along the edges of p_x.
  std::optional<Str> match_output_prefix(const Str& x, const Str& y) const;
  const StringSet* accept_at(const Str& x) const;
  const StringSet& edge_output_at(const Str& x) const;  // incoming edge of q_x

  // Multiplies the incoming edge of q_x by p and divides every #-output at
  // or below x. Returns false untouched when some #-output member would not
  // survive the division.
  bool advance(const Str& x, const StringSet& p);

  // Retargets the incoming edge of q_y to the red state q_x and folds the
  // tree below y onto the graph at x. Throws FoldConflict when the fold
  // cannot keep every folded pair recognized.
  void merge_into(const Str& x_red, const Str& y);

  bool recognizes(const Str& x, const Str& y) const;
  int alive_states() const;
  // Compact, trim machine with states relabeled in llex access order.
  Sdt to_sdt() const;

 private:
  struct Edge {
    int target;
    StringSet output;
  };
  struct Node {
    std::map<char, Edge> out;
    std::optional<StringSet> accept;
    bool red = false;
    bool alive = true;
  };
  std::vector<int> subtree_of(int node) const;  // tree states below, inclusive
  void fold(int src, int dst);
  void divide_subtree_accepts(int node, const StringSet& q);
  bool subtree_division_safe(int node, const StringSet& q) const;

  Alphabet in_;
  Alphabet out_;
  std::vector<Node> nodes_;
  std::vector<Str> red_;
};

// Alg. 1: the tree-like machine that recognizes exactly the pairs of d.
Sdt initial_transducer(const Dataset& d);

// COMPARE: true when every pair <x, zR> and <x, wS> in d passes the swapped
// queries [x, wR] and [x, zS].
bool compare_swapped(const Str& x, const Str& z, const Str& w,
                     const Dataset& d, Oracle& o);

// Alg. 2: candidate antichains of the translations of x-hat behind x_least,
// assembled from prefixes of the llex-least translation. Ascending order;
// always contains {lambda}.
std::vector<StringSet> vac_candidates(const Dataset& d, const Str& x,
                                      const Str& x_least, Oracle& o);

// Alg. 3: the ac-greatest candidate that no pair of d refutes under
// translation queries re-rooted at x_least.
StringSet test_vps(const Str& x, const Str& x_least,
                   const std::vector<StringSet>& candidates, const Dataset& d,
                   Oracle& o);

// Alg. 4: advance the strongest surviving candidate onto the incoming edge
// of q_x and divide the subtree's #-outputs.
void onward(Hypothesis& h, const Str& x, const Dataset& d, Oracle& o);

// FUTURE: no pair of d extending x or y witnesses, via swapped queries, a
// difference between the futures of the two states.
bool future_agrees(const Hypothesis& h, const Str& x, const Str& y,
                   const Dataset& d, Oracle& o);

// Alg. 5: merge q_y into red q_x when the futures agree. Returns whether
// the merge happened.
bool merge_states(Hypothesis& h, const Str& x_red, const Str& y,
                  const Dataset& d, Oracle& o);

// Alg. 6: the full driver. Returns the learned machine, validated.
Sdt learn(const Dataset& d, Oracle& o);

}  // namespace sdt

#endif  // SDT_LEARNER_HPP_
