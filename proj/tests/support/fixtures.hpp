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

#ifndef SDT_TESTS_SUPPORT_FIXTURES_HPP_
#define SDT_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "sdt/strings.hpp"
#include "sdt/transducer.hpp"

namespace fixtures {

inline sdt::Alphabet ab() { return sdt::Alphabet("ab"); }
inline sdt::Alphabet a_only() { return sdt::Alphabet("a"); }
inline sdt::Alphabet upper_ab() { return sdt::Alphabet("AB"); }
inline sdt::Alphabet upper_a() { return sdt::Alphabet("A"); }

inline sdt::StringSet set_of(const sdt::Alphabet& alpha,
                             std::vector<std::string> members) {
  return sdt::StringSet(alpha, std::move(members));
}

// 12-string set whose valid antichains are {lambda}, {aa,ba,bb},
// {aaaa,aab,baaa,bab,bbaa,bbb} and the set itself.
inline sdt::StringSet s12() {
  return set_of(ab(), {"aaaaa", "aaaab", "aaba", "aabb", "baaaa", "baaab",
                       "baba", "babb", "bbaaa", "bbaab", "bbba", "bbbb"});
}

inline sdt::StringSet s12_p1() { return set_of(ab(), {"aa", "ba", "bb"}); }
inline sdt::StringSet s12_p2() {
  return set_of(ab(), {"aaaa", "aab", "baaa", "bab", "bbaa", "bbb"});
}
// A maximal antichain of s12 that is not valid.
inline sdt::StringSet s12_invalid_maximal() {
  return set_of(ab(), {"aaa", "aab", "baa", "bab", "bba", "bbb"});
}

// 24-string set with the maximal factorization
// {a,b} * {aa,b} * {a,ba,bb} * {a,b}.
inline sdt::StringSet s24() {
  return set_of(
      ab(),
      {"aaaaa",  "aaaab",  "aaabaa", "aaabab", "aaabba", "aaabbb",
       "abaa",   "abab",   "abbaa",  "abbab",  "abbba",  "abbbb",
       "baaaa",  "baaab",  "baabaa", "baabab", "baabba", "baabbb",
       "bbaa",   "bbab",   "bbbaa",  "bbbab",  "bbbba",  "bbbbb"});
}

inline std::vector<sdt::StringSet> s24_factors() {
  return {set_of(ab(), {"a", "b"}), set_of(ab(), {"aa", "b"}),
          set_of(ab(), {"a", "ba", "bb"}), set_of(ab(), {"a", "b"})};
}

// The two displayed suffix sets of the factorization example.
inline sdt::StringSet s24_quotient1() {
  return set_of(ab(), {"aaaa", "aaab", "aabaa", "aabab", "aabba", "aabbb",
                       "baa", "bab", "bbaa", "bbab", "bbba", "bbbb"});
}
inline sdt::StringSet s24_quotient2() {
  return set_of(ab(), {"aa", "ab", "baa", "bab", "bba", "bbb"});
}

// Single looping state emitting {A,B}; accepts everywhere with {lambda}.
inline sdt::Sdt g0() {
  sdt::Sdt g(a_only(), upper_ab());
  sdt::StateId q0 = g.add_state();
  g.set_initial(q0);
  g.add_transition(q0, 'a', q0, set_of(upper_ab(), {"A", "B"}));
  g.set_accept(q0, set_of(upper_ab(), {""}));
  return g;
}

// First edge emits {A,B}, then a loop emitting {A}.
inline sdt::Sdt g1() {
  sdt::Sdt g(a_only(), upper_ab());
  sdt::StateId q0 = g.add_state();
  sdt::StateId q1 = g.add_state();
  g.set_initial(q0);
  g.add_transition(q0, 'a', q1, set_of(upper_ab(), {"A", "B"}));
  g.add_transition(q1, 'a', q1, set_of(upper_ab(), {"A"}));
  g.set_accept(q0, set_of(upper_ab(), {""}));
  g.set_accept(q1, set_of(upper_ab(), {""}));
  return g;
}

// Two {A,B} edges, then a loop emitting {A}.
inline sdt::Sdt g2() {
  sdt::Sdt g(a_only(), upper_ab());
  sdt::StateId q0 = g.add_state();
  sdt::StateId q1 = g.add_state();
  sdt::StateId q2 = g.add_state();
  g.set_initial(q0);
  g.add_transition(q0, 'a', q1, set_of(upper_ab(), {"A", "B"}));
  g.add_transition(q1, 'a', q2, set_of(upper_ab(), {"A", "B"}));
  g.add_transition(q2, 'a', q2, set_of(upper_ab(), {"A"}));
  g.set_accept(q0, set_of(upper_ab(), {""}));
  g.set_accept(q1, set_of(upper_ab(), {""}));
  g.set_accept(q2, set_of(upper_ab(), {""}));
  return g;
}

// Output held back on the #-transition.
inline sdt::Sdt lazy_single_pair() {
  sdt::Sdt g(a_only(), upper_a());
  sdt::StateId q0 = g.add_state();
  sdt::StateId q1 = g.add_state();
  g.set_initial(q0);
  g.add_transition(q0, 'a', q1, set_of(upper_a(), {""}));
  g.set_accept(q1, set_of(upper_a(), {"A"}));
  return g;
}

// The same bi-language with the output advanced onto the edge.
inline sdt::Sdt eager_single_pair() {
  sdt::Sdt g(a_only(), upper_a());
  sdt::StateId q0 = g.add_state();
  sdt::StateId q1 = g.add_state();
  g.set_initial(q0);
  g.add_transition(q0, 'a', q1, set_of(upper_a(), {"A"}));
  g.set_accept(q1, set_of(upper_a(), {""}));
  return g;
}

}  // namespace fixtures

#endif  // SDT_TESTS_SUPPORT_FIXTURES_HPP_
