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

#include "sdt/transducer.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <random>
#include <sstream>

#include "sdt/antichain.hpp"

namespace sdt {

Sdt::Sdt(Alphabet input_alphabet, Alphabet output_alphabet)
    : in_(std::move(input_alphabet)), out_(std::move(output_alphabet)) {}

StateId Sdt::add_state() {
  states_.emplace_back();
  return static_cast<StateId>(states_.size() - 1);
}

void Sdt::check_state(StateId q) const {
  if (q < 0 || q >= state_count())
    throw Error("state id " + std::to_string(q) + " out of range");
}

void Sdt::set_initial(StateId q) {
  check_state(q);
  initial_ = q;
}

void Sdt::add_transition(StateId from, char symbol, StateId to,
                         StringSet output) {
  check_state(from);
  check_state(to);
  in_.rank(symbol);
  require_same_alphabet(output.alphabet(), out_);
  auto [it, inserted] =
      states_[from].out.emplace(symbol, Transition{to, std::move(output)});
  if (!inserted)
    throw Error(std::string("duplicate transition on (q") +
                std::to_string(from) + ", " + symbol + ")");
}

void Sdt::set_accept(StateId q, StringSet output) {
  check_state(q);
  require_same_alphabet(output.alphabet(), out_);
  states_[q].accept = std::move(output);
}

const std::map<char, Transition>& Sdt::transitions_from(StateId q) const {
  check_state(q);
  return states_[q].out;
}

const StringSet* Sdt::accept(StateId q) const {
  check_state(q);
  return states_[q].accept ? &*states_[q].accept : nullptr;
}

std::optional<StateId> Sdt::delta(StateId q, char symbol) const {
  check_state(q);
  auto it = states_[q].out.find(symbol);
  if (it == states_[q].out.end()) return std::nullopt;
  return it->second.target;
}

int Sdt::edge_count() const {
  int n = 0;
  for (const State& s : states_) {
    n += static_cast<int>(s.out.size());
    if (s.accept) ++n;
  }
  return n;
}

std::size_t Sdt::output_weight() const {
  std::size_t n = 0;
  auto weigh = [&n](const StringSet& set) {
    for (const Str& w : set.members()) n += w.size() + 1;
  };
  for (const State& s : states_) {
    for (const auto& [c, t] : s.out) weigh(t.output);
    if (s.accept) weigh(*s.accept);
  }
  return n;
}

namespace {

std::vector<bool> reachable_states(const Sdt& g) {
  std::vector<bool> seen(g.state_count(), false);
  std::deque<StateId> queue{g.initial()};
  seen[g.initial()] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const auto& [c, t] : g.transitions_from(q)) {
      if (!seen[t.target]) {
        seen[t.target] = true;
        queue.push_back(t.target);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable_states(const Sdt& g) {
  std::vector<std::vector<StateId>> rev(g.state_count());
  for (StateId q = 0; q < g.state_count(); ++q)
    for (const auto& [c, t] : g.transitions_from(q)) rev[t.target].push_back(q);
  std::vector<bool> seen(g.state_count(), false);
  std::deque<StateId> queue;
  for (StateId q = 0; q < g.state_count(); ++q) {
    if (g.accept(q)) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId p : rev[q]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

void check_output_set(const StringSet& set, const std::string& where,
                      const Alphabet& out, std::vector<std::string>* bad) {
  if (set.alphabet() != out) {
    bad->push_back(where + ": output set over the wrong alphabet");
    return;
  }
  if (set.empty()) bad->push_back(where + ": empty output set");
  if (!is_antichain(set)) bad->push_back(where + ": comparable outputs");
}

}  // namespace

std::vector<std::string> validate(const Sdt& g) {
  std::vector<std::string> bad;
  if (g.state_count() == 0) {
    bad.push_back("machine has no states");
    return bad;
  }
  for (StateId q = 0; q < g.state_count(); ++q) {
    for (const auto& [c, t] : g.transitions_from(q)) {
      std::string where =
          "trans(q" + std::to_string(q) + ", " + std::string(1, c) + ")";
      if (!g.input_alphabet().contains(c))
        bad.push_back(where + ": symbol outside the input alphabet");
      check_output_set(t.output, where, g.output_alphabet(), &bad);
    }
    if (const StringSet* acc = g.accept(q))
      check_output_set(*acc, "accept(q" + std::to_string(q) + ")",
                       g.output_alphabet(), &bad);
  }
  std::vector<bool> reach = reachable_states(g);
  std::vector<bool> coreach = coreachable_states(g);
  for (StateId q = 0; q < g.state_count(); ++q) {
    if (!reach[q])
      bad.push_back("state q" + std::to_string(q) + " unreachable");
    else if (!coreach[q])
      bad.push_back("state q" + std::to_string(q) + " not co-reachable");
  }
  return bad;
}

std::optional<Path> path_of(const Sdt& g, const Str& x) {
  Path p;
  StateId q = g.initial();
  for (char c : x) {
    auto it = g.transitions_from(q).find(c);
    if (it == g.transitions_from(q).end()) return std::nullopt;
    p.steps.emplace_back(q, c);
    q = it->second.target;
  }
  p.end = q;
  p.accepted = g.accept(q) != nullptr;
  return p;
}

std::optional<StringSet> path_output(const Sdt& g, const Str& x) {
  StringSet acc(g.output_alphabet(), {Str()});
  StateId q = g.initial();
  for (char c : x) {
    auto it = g.transitions_from(q).find(c);
    if (it == g.transitions_from(q).end()) return std::nullopt;
    acc = product(acc, it->second.output);
    q = it->second.target;
  }
  return acc;
}

Str least_path_output(const Sdt& g, const Str& x) {
  // The llex-least member of a product is the concatenation of the
  // llex-least member of every factor.
  Str out;
  StateId q = g.initial();
  for (char c : x) {
    auto it = g.transitions_from(q).find(c);
    if (it == g.transitions_from(q).end())
      throw Error("least_path_output: no path for input");
    out += it->second.output.llex_least();
    q = it->second.target;
  }
  return out;
}

std::optional<StringSet> translate(const Sdt& g, const Str& x,
                                   std::size_t cap) {
  StateId q = g.initial();
  std::vector<const StringSet*> factors;
  for (char c : x) {
    auto it = g.transitions_from(q).find(c);
    if (it == g.transitions_from(q).end()) return std::nullopt;
    factors.push_back(&it->second.output);
    q = it->second.target;
  }
  const StringSet* acc = g.accept(q);
  if (!acc) return std::nullopt;
  factors.push_back(acc);
  StringSet result(g.output_alphabet(), {Str()});
  for (const StringSet* f : factors) {
    if (result.size() * f->size() > cap)
      throw PairCapExceeded("translate: output set exceeds cap",
                            result.size() * f->size());
    result = product(result, *f);
  }
  return result;
}

bool contains_translation(const Sdt& g, const Str& x, const Str& y) {
  StateId q = g.initial();
  std::size_t pos = 0;
  for (char c : x) {
    auto it = g.transitions_from(q).find(c);
    if (it == g.transitions_from(q).end()) return false;
    // At most one member of a prefix code prefixes the remainder.
    bool advanced = false;
    for (const Str& w : it->second.output.members()) {
      if (y.compare(pos, w.size(), w) == 0) {
        pos += w.size();
        advanced = true;
        break;
      }
    }
    if (!advanced) return false;
    q = it->second.target;
  }
  const StringSet* acc = g.accept(q);
  return acc && acc->contains(y.substr(pos));
}

bool in_domain(const Sdt& g, const Str& x) {
  auto p = path_of(g, x);
  return p && p->accepted;
}

std::optional<Str> least_completion(const Sdt& g, const Str& x) {
  auto p = path_of(g, x);
  if (!p) return std::nullopt;
  // Breadth-first over states with symbols in alphabet order yields the
  // llex-least accepted suffix.
  std::vector<bool> seen(g.state_count(), false);
  std::deque<std::pair<StateId, Str>> queue{{p->end, Str()}};
  seen[p->end] = true;
  while (!queue.empty()) {
    auto [q, suffix] = queue.front();
    queue.pop_front();
    if (g.accept(q)) return x + suffix;
    for (char c : g.input_alphabet().symbols()) {
      auto t = g.delta(q, c);
      if (t && !seen[*t]) {
        seen[*t] = true;
        queue.emplace_back(*t, suffix + c);
      }
    }
  }
  return std::nullopt;
}

Dataset enumerate_pairs(const Sdt& g, int max_len, std::size_t pair_cap) {
  Dataset d(g.input_alphabet(), g.output_alphabet());
  std::size_t count = 0;
  // Depth-first in llex order over the path tree.
  std::vector<std::pair<Str, StateId>> layer{{Str(), g.initial()}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::pair<Str, StateId>> next;
    for (const auto& [x, q] : layer) {
      if (g.accept(q)) {
        StringSet ys = *translate(g, x, pair_cap);
        count += ys.size();
        if (count > pair_cap)
          throw PairCapExceeded("enumerate_pairs: more than " +
                                    std::to_string(pair_cap) + " pairs",
                                count);
        for (const Str& y : ys.members()) d.add(x, y);
      }
      if (len < max_len) {
        for (char c : g.input_alphabet().symbols()) {
          auto t = g.delta(q, c);
          if (t) next.emplace_back(x + c, *t);
        }
      }
    }
    layer = std::move(next);
  }
  return d;
}

Sdt trimmed(const Sdt& g) {
  std::vector<bool> reach = reachable_states(g);
  std::vector<bool> coreach = coreachable_states(g);
  std::vector<bool> keep(g.state_count());
  for (StateId q = 0; q < g.state_count(); ++q) keep[q] = reach[q] && coreach[q];
  if (!keep[g.initial()])
    throw Error("trim: the machine accepts nothing");

  // Relabel in breadth-first llex order of access strings.
  std::vector<StateId> order;
  std::vector<StateId> remap(g.state_count(), -1);
  std::deque<StateId> queue{g.initial()};
  remap[g.initial()] = 0;
  order.push_back(g.initial());
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (char c : g.input_alphabet().symbols()) {
      auto t = g.delta(q, c);
      if (t && keep[*t] && remap[*t] < 0) {
        remap[*t] = static_cast<StateId>(order.size());
        order.push_back(*t);
        queue.push_back(*t);
      }
    }
  }
  Sdt out(g.input_alphabet(), g.output_alphabet());
  for (std::size_t i = 0; i < order.size(); ++i) out.add_state();
  out.set_initial(0);
  for (StateId q : order) {
    for (const auto& [c, t] : g.transitions_from(q))
      if (keep[t.target])
        out.add_transition(remap[q], c, remap[t.target], t.output);
    if (const StringSet* acc = g.accept(q)) out.set_accept(remap[q], *acc);
  }
  return out;
}

std::vector<Str> min_access_strings(const Sdt& g) {
  std::vector<Str> access(g.state_count());
  std::vector<bool> seen(g.state_count(), false);
  std::deque<StateId> queue{g.initial()};
  seen[g.initial()] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (char c : g.input_alphabet().symbols()) {
      auto t = g.delta(q, c);
      if (t && !seen[*t]) {
        seen[*t] = true;
        access[*t] = access[q] + c;
        queue.push_back(*t);
      }
    }
  }
  return access;
}

namespace {

Str random_string(std::mt19937_64& rng, const Alphabet& alpha, int len) {
  Str s;
  for (int i = 0; i < len; ++i)
    s += alpha.symbols()[rng() % alpha.size()];
  return s;
}

StringSet random_antichain(std::mt19937_64& rng, const Alphabet& alpha,
                           int max_len, int max_set) {
  std::vector<Str> members;
  const int target = 1 + static_cast<int>(rng() % std::max(1, max_set));
  for (int tries = 0; tries < 4 * target && (int)members.size() < target;
       ++tries) {
    Str w = random_string(rng, alpha, static_cast<int>(rng() % (max_len + 1)));
    bool ok = true;
    for (const Str& m : members)
      if (comparable(m, w)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(w);
  }
  return StringSet(alpha, std::move(members));
}

}  // namespace

Sdt random_sdt(int n_states, const Alphabet& input_alphabet,
               const Alphabet& output_alphabet, int max_out_len,
               int max_out_set, std::uint64_t seed) {
  if (n_states < 1) throw Error("random_sdt: need at least one state");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Sdt g(input_alphabet, output_alphabet);
    for (int i = 0; i < n_states; ++i) g.add_state();
    g.set_initial(0);
    for (StateId q = 0; q < n_states; ++q) {
      for (char c : input_alphabet.symbols()) {
        if (rng() % 100 < 75) {
          StateId to = static_cast<StateId>(rng() % n_states);
          g.add_transition(q, c, to,
                           random_antichain(rng, output_alphabet, max_out_len,
                                            max_out_set));
        }
      }
    }
    bool any_accept = false;
    for (StateId q = 0; q < n_states; ++q) {
      if (rng() % 100 < 40) {
        g.set_accept(q, random_antichain(rng, output_alphabet, max_out_len,
                                         max_out_set));
        any_accept = true;
      }
    }
    if (!any_accept)
      g.set_accept(static_cast<StateId>(rng() % n_states),
                   StringSet(output_alphabet, {Str()}));
    try {
      Sdt t = trimmed(g);
      if (is_valid(t)) return t;
    } catch (const Error&) {
      // initial state lost its domain; redraw
    }
  }
  throw Error("random_sdt: no valid machine after bounded retries");
}

std::string to_dot(const Sdt& g) {
  std::ostringstream out;
  out << "digraph sdt {\n  rankdir=LR;\n  __start [shape=point];\n";
  std::vector<Str> access = min_access_strings(g);
  for (StateId q = 0; q < g.state_count(); ++q) {
    out << "  n" << q << " [shape=circle label=\"q_"
        << (access[q].empty() ? "\xce\xbb" : access[q]) << "\"";
    if (const StringSet* acc = g.accept(q))
      out << " peripheries=2 xlabel=\"# : " << acc->to_string() << "\"";
    out << "];\n";
  }
  out << "  __start -> n" << g.initial() << ";\n";
  for (StateId q = 0; q < g.state_count(); ++q)
    for (const auto& [c, t] : g.transitions_from(q))
      out << "  n" << q << " -> n" << t.target << " [label=\"" << c << " : "
          << t.output.to_string() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string format_sdt(const Sdt& g) {
  std::ostringstream out;
  auto spaced = [](const std::string& s) {
    std::string r;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) r += ' ';
      r += s[i];
    }
    return r;
  };
  out << "inalpha " << spaced(g.input_alphabet().symbols()) << "\n";
  out << "outalpha " << spaced(g.output_alphabet().symbols()) << "\n";
  out << "states";
  for (StateId q = 0; q < g.state_count(); ++q) out << " q" << q;
  out << "\ninitial q" << g.initial() << "\n";
  for (StateId q = 0; q < g.state_count(); ++q)
    for (const auto& [c, t] : g.transitions_from(q))
      out << "trans q" << q << " " << c << " q" << t.target << " "
          << t.output.to_string() << "\n";
  for (StateId q = 0; q < g.state_count(); ++q)
    if (const StringSet* acc = g.accept(q))
      out << "accept q" << q << " " << acc->to_string() << "\n";
  return out.str();
}

Sdt parse_sdt(std::istream& in) {
  std::optional<Alphabet> inalpha, outalpha;
  std::map<std::string, StateId> names;
  std::optional<Sdt> g;
  std::optional<std::string> initial_name;
  std::string line;
  int lineno = 0;

  auto tokens_of = [](const std::string& l) {
    std::istringstream ss(l);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
  };
  auto need_machine = [&](int ln) -> Sdt& {
    if (!g)
      throw ParseError("states must be declared after both alphabets", ln);
    return *g;
  };
  auto state_of = [&](const std::string& name, int ln) {
    auto it = names.find(name);
    if (it == names.end()) throw ParseError("unknown state " + name, ln);
    return it->second;
  };
  auto alphabet_of_tokens = [](const std::vector<std::string>& toks, int ln) {
    std::string symbols;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (toks[i].size() != 1)
        throw ParseError("alphabet symbols are single characters", ln);
      symbols += toks[i][0];
    }
    try {
      return Alphabet(symbols);
    } catch (const AlphabetError& e) {
      throw ParseError(e.what(), ln);
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& dir = toks[0];
    try {
      if (dir == "inalpha") {
        inalpha = alphabet_of_tokens(toks, lineno);
      } else if (dir == "outalpha") {
        outalpha = alphabet_of_tokens(toks, lineno);
      } else if (dir == "states") {
        if (!inalpha || !outalpha)
          throw ParseError("states before alphabets", lineno);
        g.emplace(*inalpha, *outalpha);
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (names.count(toks[i]))
            throw ParseError("duplicate state " + toks[i], lineno);
          names[toks[i]] = g->add_state();
        }
        if (names.empty()) throw ParseError("no states declared", lineno);
      } else if (dir == "initial") {
        if (toks.size() != 2) throw ParseError("usage: initial STATE", lineno);
        need_machine(lineno).set_initial(state_of(toks[1], lineno));
        initial_name = toks[1];
      } else if (dir == "trans") {
        if (toks.size() != 5)
          throw ParseError("usage: trans FROM SYMBOL TO OUTPUTS", lineno);
        if (toks[2].size() != 1)
          throw ParseError("input symbols are single characters", lineno);
        Sdt& m = need_machine(lineno);
        StringSet output = StringSet::parse(m.output_alphabet(), toks[4]);
        if (!is_antichain(output))
          throw ParseError("comparable strings in output set", lineno);
        m.add_transition(state_of(toks[1], lineno), toks[2][0],
                         state_of(toks[3], lineno), std::move(output));
      } else if (dir == "accept") {
        if (toks.size() != 3)
          throw ParseError("usage: accept STATE OUTPUTS", lineno);
        Sdt& m = need_machine(lineno);
        StateId q = state_of(toks[1], lineno);
        if (m.accept(q))
          throw ParseError("duplicate accept for " + toks[1], lineno);
        StringSet output = StringSet::parse(m.output_alphabet(), toks[2]);
        if (!is_antichain(output))
          throw ParseError("comparable strings in output set", lineno);
        m.set_accept(q, std::move(output));
      } else {
        throw ParseError("unknown directive '" + dir + "'", lineno);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!g) throw ParseError("no machine in input", lineno);
  if (!initial_name) throw ParseError("missing initial directive", lineno);
  return *g;
}

}  // namespace sdt
