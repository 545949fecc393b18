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

#include <algorithm>
#include <deque>
#include <set>

#include "sdt/antichain.hpp"

namespace sdt {

Hypothesis::Hypothesis(const Dataset& d)
    : in_(d.input_alphabet()), out_(d.output_alphabet()) {
  if (d.empty()) throw Error("initial transducer: empty dataset");
  nodes_.emplace_back();
  const StringSet lambda_out(out_, {Str()});
  for (const Str& x : d.inputs()) {
    int cur = 0;
    for (char c : x) {
      auto it = nodes_[cur].out.find(c);
      if (it == nodes_[cur].out.end()) {
        nodes_.emplace_back();
        int fresh = static_cast<int>(nodes_.size()) - 1;
        nodes_[cur].out.emplace(c, Edge{fresh, lambda_out});
        cur = fresh;
      } else {
        cur = it->second.target;
      }
    }
    nodes_[cur].accept = StringSet(out_, d.outputs_of(x));
  }
}

int Hypothesis::node_at(const Str& x) const {
  int cur = 0;
  for (char c : x) {
    auto it = nodes_[cur].out.find(c);
    if (it == nodes_[cur].out.end()) return -1;
    cur = it->second.target;
  }
  return cur;
}

bool Hypothesis::is_red(const Str& x) const {
  int n = node_at(x);
  return n >= 0 && nodes_[n].red;
}

void Hypothesis::set_red(const Str& x) {
  int n = node_at(x);
  if (n < 0) throw Error("set_red: no state at access string");
  if (!nodes_[n].red) {
    nodes_[n].red = true;
    red_.push_back(x);
  }
}

std::vector<Str> Hypothesis::frontier() const {
  // Breadth-first with symbols in alphabet order discovers states in llex
  // order of their least access strings.
  std::vector<Str> result;
  std::vector<bool> seen(nodes_.size(), false);
  std::deque<std::pair<int, Str>> queue{{0, Str()}};
  seen[0] = true;
  while (!queue.empty()) {
    auto [n, access] = queue.front();
    queue.pop_front();
    for (char c : in_.symbols()) {
      auto it = nodes_[n].out.find(c);
      if (it == nodes_[n].out.end()) continue;
      int t = it->second.target;
      if (seen[t]) continue;
      seen[t] = true;
      if (!nodes_[t].red && nodes_[n].red) result.push_back(access + c);
      queue.emplace_back(t, access + c);
    }
  }
  return result;
}

Str Hypothesis::least_output_prefix(const Str& x) const {
  Str out;
  int cur = 0;
  for (char c : x) {
    auto it = nodes_[cur].out.find(c);
    if (it == nodes_[cur].out.end())
      throw Error("least_output_prefix: no state at access string");
    out += it->second.output.llex_least();
    cur = it->second.target;
  }
  return out;
}

std::optional<Str> Hypothesis::match_output_prefix(const Str& x,
                                                   const Str& y) const {
  std::size_t pos = 0;
  int cur = 0;
  for (char c : x) {
    auto it = nodes_[cur].out.find(c);
    if (it == nodes_[cur].out.end()) return std::nullopt;
    bool advanced = false;
    for (const Str& w : it->second.output.members()) {
      if (y.compare(pos, w.size(), w) == 0) {
        pos += w.size();
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
    cur = it->second.target;
  }
  return y.substr(0, pos);
}

const StringSet* Hypothesis::accept_at(const Str& x) const {
  int n = node_at(x);
  if (n < 0) throw Error("accept_at: no state at access string");
  return nodes_[n].accept ? &*nodes_[n].accept : nullptr;
}

const StringSet& Hypothesis::edge_output_at(const Str& x) const {
  if (x.empty()) throw Error("edge_output_at: the root has no incoming edge");
  int parent = node_at(truncated(x));
  if (parent < 0) throw Error("edge_output_at: no state at access string");
  return nodes_[parent].out.at(x.back()).output;
}

std::vector<int> Hypothesis::subtree_of(int node) const {
  std::vector<int> result;
  std::deque<int> queue{node};
  std::set<int> seen{node};
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    if (nodes_[n].red)
      throw Error("subtree_of: red state inside a tree region");
    result.push_back(n);
    for (const auto& [c, e] : nodes_[n].out)
      if (seen.insert(e.target).second) queue.push_back(e.target);
  }
  return result;
}

bool Hypothesis::subtree_division_safe(int node, const StringSet& q) const {
  for (int n : subtree_of(node)) {
    if (!nodes_[n].accept) continue;
    for (const Str& m : nodes_[n].accept->members()) {
      bool covered = false;
      for (const Str& p : q.members())
        if (is_prefix(p, m)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  }
  return true;
}

void Hypothesis::divide_subtree_accepts(int node, const StringSet& q) {
  if (q.size() == 1 && q.members()[0].empty()) return;
  for (int n : subtree_of(node))
    if (nodes_[n].accept)
      nodes_[n].accept = left_quotient(q, *nodes_[n].accept);
}

bool Hypothesis::advance(const Str& x, const StringSet& p) {
  if (x.empty()) throw Error("advance: cannot onward the initial state");
  if (p.size() == 1 && p.members()[0].empty()) return true;
  int nx = node_at(x);
  if (nx < 0) throw Error("advance: no state at access string");
  if (!subtree_division_safe(nx, p)) return false;
  int parent = node_at(truncated(x));
  Edge& e = nodes_[parent].out.at(x.back());
  e.output = product(e.output, p);
  divide_subtree_accepts(nx, p);
  return true;
}

void Hypothesis::fold(int src, int dst) {
  if (src == dst) throw Error("fold: source equals destination");
  if (!nodes_[dst].alive) throw Error("fold: destination is dead");
  if (nodes_[src].accept) {
    if (nodes_[dst].red) {
      const StringSet* acc = nodes_[dst].accept ? &*nodes_[dst].accept : nullptr;
      if (!acc)
        throw FoldConflict("fold: acceptance lands on a non-accepting red state");
      for (const Str& m : nodes_[src].accept->members())
        if (!acc->contains(m))
          throw FoldConflict(
              "fold: #-output not contained in the red accept set");
    } else {
      std::vector<Str> merged = nodes_[src].accept->members();
      if (nodes_[dst].accept) {
        const auto& more = nodes_[dst].accept->members();
        merged.insert(merged.end(), more.begin(), more.end());
      }
      StringSet unioned(out_, std::move(merged));
      if (!is_antichain(unioned))
        throw FoldConflict("fold: merged #-outputs are not an antichain");
      nodes_[dst].accept = std::move(unioned);
    }
  }
  const StringSet lambda_out(out_, {Str()});
  auto edges = nodes_[src].out;
  for (const auto& [c, e] : edges) {
    auto it = nodes_[dst].out.find(c);
    if (it == nodes_[dst].out.end()) {
      nodes_[dst].out.emplace(c, e);  // graft the remaining subtree
      continue;
    }
    if (e.output != lambda_out)
      throw Error("fold: tree edge carries a non-lambda output");
    const StringSet& q = it->second.output;
    if (!subtree_division_safe(e.target, q))
      throw FoldConflict("fold: edge output does not divide the subtree");
    divide_subtree_accepts(e.target, q);
    fold(e.target, it->second.target);
  }
  nodes_[src].alive = false;
  nodes_[src].out.clear();
  nodes_[src].accept.reset();
}

void Hypothesis::merge_into(const Str& x_red, const Str& y) {
  int nx = node_at(x_red);
  int ny = node_at(y);
  if (nx < 0 || ny < 0) throw Error("merge_into: missing state");
  if (!nodes_[nx].red) throw Error("merge_into: target is not red");
  if (nodes_[ny].red) throw Error("merge_into: source is red");
  if (y.empty()) throw Error("merge_into: cannot merge the initial state");
  int parent = node_at(truncated(y));
  nodes_[parent].out.at(y.back()).target = nx;
  fold(ny, nx);
}

bool Hypothesis::recognizes(const Str& x, const Str& y) const {
  int cur = 0;
  std::size_t pos = 0;
  for (char c : x) {
    auto it = nodes_[cur].out.find(c);
    if (it == nodes_[cur].out.end()) return false;
    bool advanced = false;
    for (const Str& w : it->second.output.members()) {
      if (y.compare(pos, w.size(), w) == 0) {
        pos += w.size();
        advanced = true;
        break;
      }
    }
    if (!advanced) return false;
    cur = it->second.target;
  }
  return nodes_[cur].accept && nodes_[cur].accept->contains(y.substr(pos));
}

int Hypothesis::alive_states() const {
  int n = 0;
  for (const Node& node : nodes_)
    if (node.alive) ++n;
  return n;
}

Sdt Hypothesis::to_sdt() const {
  std::vector<int> remap(nodes_.size(), -1);
  std::vector<int> order;
  std::deque<int> queue{0};
  remap[0] = 0;
  order.push_back(0);
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    for (char c : in_.symbols()) {
      auto it = nodes_[n].out.find(c);
      if (it == nodes_[n].out.end()) continue;
      int t = it->second.target;
      if (remap[t] < 0) {
        remap[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  Sdt g(in_, out_);
  for (std::size_t i = 0; i < order.size(); ++i) g.add_state();
  g.set_initial(0);
  for (int n : order) {
    for (const auto& [c, e] : nodes_[n].out)
      g.add_transition(remap[n], c, remap[e.target], e.output);
    if (nodes_[n].accept) g.set_accept(remap[n], *nodes_[n].accept);
  }
  return g;
}

Sdt initial_transducer(const Dataset& d) { return Hypothesis(d).to_sdt(); }

bool compare_swapped(const Str& x, const Str& z, const Str& w,
                     const Dataset& d, Oracle& o) {
  if (z == w) return true;
  for (const Str& y : d.outputs_of(x)) {
    if (is_prefix(z, y) && !o.query(x, w + y.substr(z.size()))) return false;
  }
  for (const Str& y : d.outputs_of(x)) {
    if (is_prefix(w, y) && !o.query(x, z + y.substr(w.size()))) return false;
  }
  return true;
}

namespace {

void sort_candidates(std::vector<StringSet>* cands) {
  std::sort(cands->begin(), cands->end(),
            [](const StringSet& a, const StringSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              if (ac_less(a, b)) return true;
              if (ac_less(b, a)) return false;
              return a.members() < b.members();
            });
}

}  // namespace

std::vector<StringSet> vac_candidates(const Dataset& d, const Str& x,
                                      const Str& x_least, Oracle& o) {
  const Alphabet& out_alpha = d.output_alphabet();
  const StringSet lambda_only(out_alpha, {Str()});

  Str xhat;
  bool have_xhat = false;
  for (const Str& input : d.inputs()) {
    if (is_prefix(x, input)) {
      xhat = input;
      have_xhat = true;
      break;
    }
  }
  if (!have_xhat)
    throw Error("vac_candidates: no accepted extension of x in the data");

  std::vector<Str> leaves;
  for (const Str& y : d.outputs_of(xhat))
    if (is_prefix(x_least, y)) leaves.push_back(y.substr(x_least.size()));
  if (leaves.empty()) return {lambda_only};

  const Str& z = leaves.front();  // llex-least translation behind x_least
  std::vector<StringSet> result;
  for (std::size_t k = 0; k <= z.size(); ++k) {
    const Str zhat = z.substr(0, k);
    std::set<Str> members{zhat};
    bool ok = true;
    for (const Str& r : leaves) {
      if (r == z) continue;
      bool matched = false;
      for (std::size_t j = 0; j <= r.size(); ++j) {
        const Str rhat = r.substr(0, j);
        if (compare_swapped(xhat, x_least + zhat, x_least + rhat, d, o)) {
          members.insert(rhat);
          matched = true;
          break;
        }
      }
      if (!matched) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    StringSet candidate(out_alpha,
                        std::vector<Str>(members.begin(), members.end()));
    if (!is_antichain(candidate)) continue;
    if (std::find(result.begin(), result.end(), candidate) == result.end())
      result.push_back(candidate);
  }
  if (std::find(result.begin(), result.end(), lambda_only) == result.end())
    result.push_back(lambda_only);
  sort_candidates(&result);
  return result;
}

StringSet test_vps(const Str& x, const Str& x_least,
                   const std::vector<StringSet>& candidates, const Dataset& d,
                   Oracle& o) {
  if (candidates.empty()) throw Error("test_vps: no candidates");
  for (std::size_t i = candidates.size(); i-- > 0;) {
    const StringSet& p = candidates[i];
    bool ok = true;
    for (const Str& input : d.inputs()) {
      if (!is_prefix(x, input)) continue;
      for (const Str& zfull : d.outputs_of(input)) {
        if (!is_prefix(x_least, zfull)) continue;
        const Str rest = zfull.substr(x_least.size());
        const Str* r = nullptr;
        for (const Str& m : p.members()) {
          if (is_prefix(m, rest)) {
            r = &m;
            break;
          }
        }
        if (!r) {  // advancing p would orphan this pair
          ok = false;
          break;
        }
        const Str w = rest.substr(r->size());
        for (const Str& q : p.members()) {
          if (!o.query(input, x_least + q + w)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) return p;
  }
  return candidates.front();
}

void onward(Hypothesis& h, const Str& x, const Dataset& d, Oracle& o) {
  const Str x_least = h.least_output_prefix(x);
  std::vector<StringSet> cands = vac_candidates(d, x, x_least, o);
  while (!cands.empty()) {
    StringSet p = test_vps(x, x_least, cands, d, o);
    if (p.size() == 1 && p.members()[0].empty()) return;
    if (h.advance(x, p)) return;
    // Off-branch #-output members resist the division; retreat to the next
    // smaller candidate.
    cands.erase(std::remove(cands.begin(), cands.end(), p), cands.end());
  }
}

bool future_agrees(const Hypothesis& h, const Str& x, const Str& y,
                   const Dataset& d, Oracle& o) {
  const Str x0 = h.least_output_prefix(x);
  const Str y0 = h.least_output_prefix(y);
  for (const Str& z : d.inputs()) {
    if (is_prefix(x, z)) {
      for (const Str& zfull : d.outputs_of(z)) {
        auto matched = h.match_output_prefix(x, zfull);
        if (matched &&
            !o.query(y + z.substr(x.size()), y0 + zfull.substr(matched->size())))
          return false;
      }
    }
    if (is_prefix(y, z)) {
      for (const Str& zfull : d.outputs_of(z)) {
        auto matched = h.match_output_prefix(y, zfull);
        if (matched &&
            !o.query(x + z.substr(y.size()), x0 + zfull.substr(matched->size())))
          return false;
      }
    }
  }
  return true;
}

bool merge_states(Hypothesis& h, const Str& x_red, const Str& y,
                  const Dataset& d, Oracle& o) {
  if (!future_agrees(h, x_red, y, d, o)) return false;
  h.merge_into(x_red, y);
  return true;
}

Sdt learn(const Dataset& d, Oracle& o) {
  Hypothesis h(d);
  h.set_red(Str());
  while (true) {
    std::vector<Str> frontier = h.frontier();
    if (frontier.empty()) break;
    const Str x = frontier.front();
    onward(h, x, d, o);
    bool merged = false;
    const std::vector<Str> reds = h.red_access();
    for (const Str& u : reds) {
      if (merge_states(h, u, x, d, o)) {
        merged = true;
        break;
      }
    }
    if (!merged) h.set_red(x);
  }
  Sdt g = trimmed(h.to_sdt());
  std::vector<std::string> bad = validate(g);
  if (!bad.empty()) throw Error("learn: invalid result machine: " + bad[0]);
  return g;
}

}  // namespace sdt
