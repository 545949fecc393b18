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

#include "sdt/learner.hpp"

#include "doctest.h"
#include "sdt/equivalence.hpp"
#include "support/fixtures.hpp"

using namespace sdt;
using fixtures::set_of;
using fixtures::upper_ab;

namespace {

// Machine generating f(a) = s12 through the first valid antichain:
// a : {aa,ba,bb}, then # : {aaa,aab,ba,bb}; a second input symbol b at q1
// emits nothing and accepts {lambda}, so f(ab) = {aa,ba,bb}.
Sdt s12_machine() {
  Alphabet ab("ab");
  Sdt g(ab, ab);
  StateId q0 = g.add_state();
  StateId q1 = g.add_state();
  StateId q2 = g.add_state();
  g.set_initial(q0);
  g.add_transition(q0, 'a', q1, set_of(ab, {"aa", "ba", "bb"}));
  g.add_transition(q1, 'b', q2, set_of(ab, {""}));
  g.set_accept(q1, set_of(ab, {"aaa", "aab", "ba", "bb"}));
  g.set_accept(q2, set_of(ab, {""}));
  return g;
}

Dataset s12_tree_data() {
  Dataset d(Alphabet("ab"), Alphabet("ab"));
  for (const Str& y : fixtures::s12().members()) d.add("a", y);
  return d;
}

}  // namespace

TEST_CASE("initial transducer") {
  SUBCASE("single pair") {
    Dataset d(Alphabet("a"), Alphabet("A"));
    d.add("a", "A");
    Sdt g = initial_transducer(d);
    CHECK(g.state_count() == 2);
    CHECK(*translate(g, "a") == StringSet(Alphabet("A"), {"A"}));
    CHECK_FALSE(in_domain(g, ""));
    CHECK(g.transitions_from(0).at('a').output ==
          StringSet(Alphabet("A"), {""}));
  }
  SUBCASE("lambda only") {
    Dataset d(Alphabet("a"), Alphabet("A"));
    d.add("", "");
    Sdt g = initial_transducer(d);
    CHECK(g.state_count() == 1);
    CHECK(*translate(g, "") == StringSet(Alphabet("A"), {""}));
  }
  SUBCASE("recognizes exactly the dataset") {
    Dataset d(Alphabet("a"), upper_ab());
    d.add("a", "A");
    d.add("a", "B");
    d.add("aa", "AA");
    Sdt g = initial_transducer(d);
    CHECK(*g.accept(path_of(g, "a")->end) == set_of(upper_ab(), {"A", "B"}));
    CHECK(*g.accept(path_of(g, "aa")->end) == set_of(upper_ab(), {"AA"}));
    Dataset back = enumerate_pairs(g, 5);
    CHECK(back == d);
  }
  SUBCASE("empty dataset is an error") {
    Dataset d(Alphabet("a"), Alphabet("A"));
    CHECK_THROWS_AS(initial_transducer(d), Error);
  }
}

TEST_CASE("compare") {
  MachineOracle o(fixtures::g1());
  Dataset d = enumerate_pairs(fixtures::g1(), 2);
  // Equal arguments succeed without consuming budget.
  {
    MachineOracle counter(fixtures::g1());
    CHECK(compare_swapped("a", "A", "A", d, counter));
    CHECK(counter.stats().translation_queries == 0);
  }
  // Swapping the two branch prefixes of f(aa) works...
  CHECK(compare_swapped("aa", "A", "B", d, o));
  // ...but swapping a branch against lambda asks for [aa, A], which fails.
  CHECK_FALSE(compare_swapped("aa", "A", "", d, o));
  // Vacuous when no pair extends either prefix.
  CHECK(compare_swapped("aa", "BB", "BBB", d, o));
}

TEST_CASE("vac candidates on a two-branch translation set") {
  Dataset d = enumerate_pairs(fixtures::g1(), 1);
  MachineOracle o(fixtures::g1());
  std::vector<StringSet> cands = vac_candidates(d, "a", "", o);
  REQUIRE(cands.size() == 2);
  CHECK(cands[0] == set_of(upper_ab(), {""}));
  CHECK(cands[1] == set_of(upper_ab(), {"A", "B"}));
}

TEST_CASE("vac candidates on the 12-string worked example") {
  Dataset d = s12_tree_data();
  MachineOracle o(s12_machine());
  std::vector<StringSet> cands = vac_candidates(d, "a", "", o);
  Alphabet ab("ab");
  REQUIRE(cands.size() == 4);
  CHECK(cands[0] == StringSet(ab, {""}));
  CHECK(cands[1] == fixtures::s12_p1());
  CHECK(cands[2] == fixtures::s12_p2());
  CHECK(cands[3] == fixtures::s12());
}

TEST_CASE("vac candidates for a singleton translation set") {
  Dataset d(Alphabet("a"), upper_ab());
  d.add("a", "AB");
  Sdt target(Alphabet("a"), upper_ab());
  StateId q0 = target.add_state();
  StateId q1 = target.add_state();
  target.set_initial(q0);
  target.add_transition(q0, 'a', q1, set_of(upper_ab(), {"AB"}));
  target.set_accept(q1, set_of(upper_ab(), {""}));
  MachineOracle o(target);
  std::vector<StringSet> cands = vac_candidates(d, "a", "", o);
  REQUIRE(cands.size() == 3);  // one per prefix of AB
  CHECK(cands[0] == set_of(upper_ab(), {""}));
  CHECK(cands[1] == set_of(upper_ab(), {"A"}));
  CHECK(cands[2] == set_of(upper_ab(), {"AB"}));
}

TEST_CASE("test_vps") {
  SUBCASE("trivial array") {
    Dataset d(Alphabet("a"), upper_ab());
    d.add("a", "A");
    MachineOracle o(fixtures::g1());
    std::vector<StringSet> only{StringSet(upper_ab(), {""})};
    CHECK(test_vps("a", "", only, d, o) == only[0]);
  }
  SUBCASE("future data breaks the bigger antichains") {
    // f(ab) = {aa, ba, bb} kills the candidates above the first one.
    Dataset d = s12_tree_data();
    d.add("ab", "aa");
    MachineOracle o(s12_machine());
    std::vector<StringSet> cands = vac_candidates(d, "a", "", o);
    CHECK(test_vps("a", "", cands, d, o) == fixtures::s12_p1());
  }
  SUBCASE("without future data the full set survives") {
    Dataset d = s12_tree_data();
    MachineOracle o(s12_machine());
    std::vector<StringSet> cands = vac_candidates(d, "a", "", o);
    CHECK(test_vps("a", "", cands, d, o) == fixtures::s12());
  }
}

TEST_CASE("onward advances the shared output") {
  Dataset d = enumerate_pairs(fixtures::g1(), 2);
  MachineOracle o(fixtures::g1());
  Hypothesis h(d);
  h.set_red(Str());
  onward(h, "a", d, o);
  CHECK(h.edge_output_at("a") == set_of(upper_ab(), {"A", "B"}));
  CHECK(*h.accept_at("a") == set_of(upper_ab(), {""}));
  CHECK(*h.accept_at("aa") == set_of(upper_ab(), {"A"}));
  // The recognized pair set is untouched.
  for (const auto& [x, y] : d.pairs()) CHECK(h.recognizes(x, y));
}

TEST_CASE("onward advances the whole set when nothing continues in data") {
  Dataset d(Alphabet("a"), upper_ab());
  d.add("a", "A");
  d.add("a", "B");
  MachineOracle o(fixtures::g0());
  Hypothesis h(d);
  h.set_red(Str());
  onward(h, "a", d, o);
  CHECK(h.edge_output_at("a") == set_of(upper_ab(), {"A", "B"}));
  CHECK(*h.accept_at("a") == set_of(upper_ab(), {""}));
}

TEST_CASE("future agreement") {
  Dataset d = enumerate_pairs(fixtures::g1(), 2);
  MachineOracle o(fixtures::g1());
  Hypothesis h(d);
  h.set_red(Str());
  onward(h, "a", d, o);

  SUBCASE("a state always agrees with itself") {
    CHECK(future_agrees(h, "a", "a", d, o));
  }
  SUBCASE("the two states of the target disagree") {
    CHECK_FALSE(future_agrees(h, "", "a", d, o));
  }
  SUBCASE("vacuous without data") {
    Dataset empty_view(Alphabet("a"), upper_ab());
    empty_view.add("", "");
    CHECK(future_agrees(h, "a", "aa", empty_view, o));
  }
}

TEST_CASE("merging produces loops") {
  Dataset d = enumerate_pairs(fixtures::g0(), 3);
  MachineOracle o(fixtures::g0());
  Hypothesis h(d);
  h.set_red(Str());
  onward(h, "a", d, o);
  CHECK(merge_states(h, "", "a", d, o));
  for (const auto& [x, y] : d.pairs()) CHECK(h.recognizes(x, y));
  Sdt g = trimmed(h.to_sdt());
  CHECK(g.state_count() == 1);
  CHECK(bounded_equiv(g, fixtures::g0(), 8).equivalent);
}

TEST_CASE("failed merges leave the machine unchanged") {
  Dataset d = enumerate_pairs(fixtures::g1(), 2);
  MachineOracle o(fixtures::g1());
  Hypothesis h(d);
  h.set_red(Str());
  onward(h, "a", d, o);
  int before = h.alive_states();
  CHECK_FALSE(merge_states(h, "", "a", d, o));
  CHECK(h.alive_states() == before);
}

TEST_CASE("learning the fixture machines from enumerated pairs") {
  SUBCASE("single-loop target") {
    MachineOracle o(fixtures::g0());
    Sdt g = learn(enumerate_pairs(fixtures::g0(), 3), o);
    CHECK(g.state_count() == 1);
    CHECK(bounded_equiv(g, fixtures::g0(), 8).equivalent);
  }
  SUBCASE("two-state target") {
    MachineOracle o(fixtures::g1());
    Sdt g = learn(enumerate_pairs(fixtures::g1(), 4), o);
    CHECK(isomorphic(g, fixtures::g1()));
  }
  SUBCASE("three-state target") {
    MachineOracle o(fixtures::g2());
    Sdt g = learn(enumerate_pairs(fixtures::g2(), 5), o);
    CHECK(isomorphic(g, fixtures::g2()));
  }
  SUBCASE("every data pair stays recognized") {
    MachineOracle o(fixtures::g2());
    Dataset d = enumerate_pairs(fixtures::g2(), 4);
    Sdt g = learn(d, o);
    for (const auto& [x, y] : d.pairs()) CHECK(contains_translation(g, x, y));
  }
}

TEST_CASE("budget exhaustion propagates") {
  MachineOracle inner(fixtures::g1());
  BudgetedOracle o(inner, 0);
  CHECK_THROWS_AS(learn(enumerate_pairs(fixtures::g1(), 3), o),
                  BudgetExhausted);
}
