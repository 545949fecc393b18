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

#include "sdt/equivalence.hpp"

#include "doctest.h"
#include "sdt/parallel.hpp"
#include "support/fixtures.hpp"

using namespace sdt;
using fixtures::set_of;
using fixtures::upper_ab;

namespace {

// g1 with the state ids swapped.
Sdt g1_relabeled() {
  Sdt g(Alphabet("a"), upper_ab());
  StateId loop = g.add_state();
  StateId init = g.add_state();
  g.set_initial(init);
  g.add_transition(init, 'a', loop, set_of(upper_ab(), {"A", "B"}));
  g.add_transition(loop, 'a', loop, set_of(upper_ab(), {"A"}));
  g.set_accept(init, set_of(upper_ab(), {""}));
  g.set_accept(loop, set_of(upper_ab(), {""}));
  return g;
}

}  // namespace

TEST_CASE("isomorphism") {
  CHECK(isomorphic(fixtures::g1(), fixtures::g1()));
  CHECK(isomorphic(fixtures::g1(), g1_relabeled()));
  CHECK_FALSE(isomorphic(fixtures::g1(), fixtures::g2()));
  CHECK_FALSE(isomorphic(fixtures::g0(), fixtures::g1()));
  CHECK_FALSE(
      isomorphic(fixtures::lazy_single_pair(), fixtures::eager_single_pair()));
  // Symmetry on the fixture pool.
  std::vector<Sdt> pool{fixtures::g0(), fixtures::g1(), fixtures::g2(),
                        g1_relabeled()};
  for (const Sdt& a : pool)
    for (const Sdt& b : pool) CHECK(isomorphic(a, b) == isomorphic(b, a));
}

TEST_CASE("bounded equivalence") {
  CHECK(bounded_equiv(fixtures::g1(), fixtures::g1(), 10).equivalent);
  CHECK(bounded_equiv(fixtures::g1(), g1_relabeled(), 10).equivalent);

  EquivResult r01 = bounded_equiv(fixtures::g0(), fixtures::g1(), 2);
  CHECK_FALSE(r01.equivalent);
  CHECK(r01.counterexample == "aa");

  CHECK(bounded_equiv(fixtures::g1(), fixtures::g2(), 1).equivalent);
  EquivResult r12 = bounded_equiv(fixtures::g1(), fixtures::g2(), 2);
  CHECK_FALSE(r12.equivalent);
  CHECK(r12.counterexample == "aa");

  // Different SDF placements of one bi-language are bounded-equivalent.
  CHECK(bounded_equiv(fixtures::lazy_single_pair(),
                      fixtures::eager_single_pair(), 6)
            .equivalent);

  // Serial reference and parallel kernel agree.
  set_parallel(false);
  EquivResult serial = bounded_equiv(fixtures::g0(), fixtures::g1(), 6);
  set_parallel(true);
  EquivResult parallel = bounded_equiv(fixtures::g0(), fixtures::g1(), 6);
  CHECK(serial.equivalent == parallel.equivalent);
  CHECK(serial.counterexample == parallel.counterexample);
}

TEST_CASE("canonicalization") {
  SUBCASE("pushes output off the # transition") {
    CanonicalReport report = canonicalize(fixtures::lazy_single_pair());
    CHECK(report.stable);
    CHECK(isomorphic(report.machine, fixtures::eager_single_pair()));
  }
  SUBCASE("already-canonical machines are fixed points") {
    CanonicalReport report = canonicalize(fixtures::g1());
    CHECK(report.stable);
    CHECK(isomorphic(report.machine, fixtures::g1()));
  }
  SUBCASE("two placements of one bi-language meet at one machine") {
    CanonicalReport lazy = canonicalize(fixtures::lazy_single_pair());
    CanonicalReport eager = canonicalize(fixtures::eager_single_pair());
    CHECK(isomorphic(lazy.machine, eager.machine));
  }
  SUBCASE("idempotent up to isomorphism") {
    for (const Sdt& g : {fixtures::g0(), fixtures::g1(), fixtures::g2()}) {
      CanonicalReport once = canonicalize(g);
      CanonicalReport twice = canonicalize(once.machine);
      CHECK(isomorphic(once.machine, twice.machine));
      CHECK(bounded_equiv(once.machine, g,
                          default_equiv_depth(once.machine, g))
                .equivalent);
    }
  }
}
