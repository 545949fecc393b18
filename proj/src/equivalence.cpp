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

#include <algorithm>
#include <deque>

#include "sdt/learner.hpp"
#include "sdt/oracle.hpp"
#include "sdt/parallel.hpp"

namespace sdt {

bool isomorphic(const Sdt& g1, const Sdt& g2) {
  if (g1.input_alphabet() != g2.input_alphabet()) return false;
  if (g1.output_alphabet() != g2.output_alphabet()) return false;
  if (g1.state_count() != g2.state_count()) return false;

  std::vector<StateId> map12(g1.state_count(), -1);
  std::vector<StateId> map21(g2.state_count(), -1);
  std::deque<std::pair<StateId, StateId>> queue{{g1.initial(), g2.initial()}};
  map12[g1.initial()] = g2.initial();
  map21[g2.initial()] = g1.initial();
  while (!queue.empty()) {
    auto [q1, q2] = queue.front();
    queue.pop_front();
    const StringSet* a1 = g1.accept(q1);
    const StringSet* a2 = g2.accept(q2);
    if ((a1 == nullptr) != (a2 == nullptr)) return false;
    if (a1 && *a1 != *a2) return false;
    const auto& t1 = g1.transitions_from(q1);
    const auto& t2 = g2.transitions_from(q2);
    if (t1.size() != t2.size()) return false;
    for (const auto& [c, e1] : t1) {
      auto it = t2.find(c);
      if (it == t2.end()) return false;
      const Transition& e2 = it->second;
      if (e1.output != e2.output) return false;
      StateId m = map12[e1.target];
      if (m < 0) {
        if (map21[e2.target] >= 0) return false;
        map12[e1.target] = e2.target;
        map21[e2.target] = e1.target;
        queue.emplace_back(e1.target, e2.target);
      } else if (m != e2.target) {
        return false;
      }
    }
  }
  // Both machines are trim, so the pairing reached every state.
  return std::count(map12.begin(), map12.end(), -1) == 0;
}

int default_equiv_depth(const Sdt& g1, const Sdt& g2) {
  std::size_t max_len = 0;
  auto scan = [&max_len](const Sdt& g) {
    for (StateId q = 0; q < g.state_count(); ++q) {
      for (const auto& [c, t] : g.transitions_from(q))
        for (const Str& w : t.output.members()) max_len = std::max(max_len, w.size());
      if (const StringSet* acc = g.accept(q))
        for (const Str& w : acc->members()) max_len = std::max(max_len, w.size());
    }
  };
  scan(g1);
  scan(g2);
  return g1.state_count() + g2.state_count() + static_cast<int>(max_len) + 2;
}

EquivResult bounded_equiv(const Sdt& g1, const Sdt& g2, int depth,
                          std::size_t cap) {
  // Joint walk over every input that is a path in either machine. Inputs at
  // one depth are independent, so the comparison fans out per layer with a
  // deterministic least-index reduction.
  std::string symbols = g1.input_alphabet().symbols();
  for (char c : g2.input_alphabet().symbols())
    if (symbols.find(c) == std::string::npos) symbols += c;

  struct Item {
    Str x;
    std::optional<StateId> q1, q2;
  };
  std::vector<Item> layer{{Str(), g1.initial(), g2.initial()}};
  for (int len = 0; len <= depth; ++len) {
    std::vector<signed char> mismatch(layer.size(), 0);
    parallel_for(layer.size(), [&](std::size_t i) {
      const Item& item = layer[i];
      bool in1 = item.q1 && g1.accept(*item.q1);
      bool in2 = item.q2 && g2.accept(*item.q2);
      if (in1 != in2) {
        mismatch[i] = 1;
        return;
      }
      if (in1 && in2) {
        StringSet y1 = *translate(g1, item.x, cap);
        StringSet y2 = *translate(g2, item.x, cap);
        if (y1.members() != y2.members()) mismatch[i] = 1;
      }
    });
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (mismatch[i]) return {false, layer[i].x};
    if (len == depth) break;
    std::vector<Item> next;
    for (const Item& item : layer) {
      for (char c : symbols) {
        std::optional<StateId> t1 =
            item.q1 ? g1.delta(*item.q1, c) : std::nullopt;
        std::optional<StateId> t2 =
            item.q2 ? g2.delta(*item.q2, c) : std::nullopt;
        if (t1 || t2) next.push_back({item.x + c, t1, t2});
      }
    }
    layer = std::move(next);
  }
  return {true, Str()};
}

CanonicalReport canonicalize(const Sdt& g, int max_rounds, std::size_t cap) {
  std::vector<std::string> bad = validate(g);
  if (!bad.empty()) throw Error("canonicalize: invalid input: " + bad[0]);

  MachineOracle oracle(g);
  int k = 2 * g.state_count() + 2;
  std::optional<Sdt> previous;
  int rounds = 0;
  for (int round = 0; round < max_rounds; ++round, ++k) {
    ++rounds;
    Sdt hypothesis = learn(enumerate_pairs(g, k, cap), oracle);
    if (previous && isomorphic(hypothesis, *previous) &&
        bounded_equiv(hypothesis, g, k, cap).equivalent)
      return {std::move(hypothesis), rounds, true};
    previous = std::move(hypothesis);
  }
  throw NonConvergence("canonicalize: no stable machine after " +
                       std::to_string(rounds) + " rounds");
}

}  // namespace sdt
