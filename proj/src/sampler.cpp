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

#include "sdt/sampler.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "sdt/antichain.hpp"
#include "sdt/learner.hpp"
#include "sdt/oracle.hpp"
#include "sdt/parallel.hpp"

namespace sdt {

int default_future_bound(const Sdt& g) {
  std::size_t max_len = 0;
  for (StateId q = 0; q < g.state_count(); ++q) {
    for (const auto& [c, t] : g.transitions_from(q))
      for (const Str& w : t.output.members())
        max_len = std::max(max_len, w.size());
    if (const StringSet* acc = g.accept(q))
      for (const Str& w : acc->members()) max_len = std::max(max_len, w.size());
  }
  return 2 * g.state_count() + static_cast<int>(max_len) + 2;
}

namespace {

// Ascending list of valid antichains of a single translation tree.
using Chain = std::vector<StringSet>;

bool chain_value_less(const StringSet& a, const StringSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

void normalize(Chain* c) {
  std::sort(c->begin(), c->end(), chain_value_less);
  c->erase(std::unique(c->begin(), c->end()), c->end());
}

Chain intersect(const Chain& a, const Chain& b) {
  Chain out;
  for (const StringSet& s : a)
    if (std::find(b.begin(), b.end(), s) != b.end()) out.push_back(s);
  return out;
}

// Valid antichains of a product distribute over the factors:
// vac(F * Rest) = vac(F) set-union F * vac(Rest).
Chain product_chain(const std::vector<const StringSet*>& factors,
                    const StringSet* accept, const Alphabet& out_alpha,
                    std::size_t cap) {
  Chain chain;
  if (accept)
    chain = valid_antichains(*accept);
  else
    chain.emplace_back(out_alpha, std::vector<Str>{Str()});
  for (std::size_t i = factors.size(); i-- > 0;) {
    const StringSet& f = *factors[i];
    Chain next = valid_antichains(f);
    for (const StringSet& v : chain) {
      if (f.size() * v.size() > cap)
        throw SearchBoundExceeded("sampler: antichain product exceeds cap");
      next.push_back(product(f, v));
    }
    normalize(&next);
    chain = std::move(next);
  }
  return chain;
}

// Bounded max-SDF quantities of one machine: per-state common valid
// antichains of the future translations, and the committed prefixes they
// induce on access strings.
class FmAnalysis {
 public:
  FmAnalysis(const Sdt& g, int bound, std::size_t cap)
      : g_(g), bound_(bound), cap_(cap), access_(min_access_strings(g)) {
    // cc_[q]: the chain of antichains valid for every translation suffix
    // tree within the horizon, built as a fixpoint over horizons.
    const int n = g.state_count();
    std::vector<std::optional<Chain>> prev(n);
    for (StateId q = 0; q < n; ++q)
      if (const StringSet* acc = g.accept(q)) prev[q] = valid_antichains(*acc);
    for (int k = 1; k <= bound_; ++k) {
      std::vector<std::optional<Chain>> cur(n);
      for (StateId q = 0; q < n; ++q) {
        std::optional<Chain> acc_chain;
        if (const StringSet* acc = g.accept(q))
          acc_chain = valid_antichains(*acc);
        std::optional<Chain> result = std::move(acc_chain);
        for (const auto& [c, t] : g.transitions_from(q)) {
          if (!prev[t.target]) continue;
          Chain term = valid_antichains(t.output);
          for (const StringSet& v : *prev[t.target]) {
            if (t.output.size() * v.size() > cap_)
              throw SearchBoundExceeded("sampler: antichain product exceeds cap");
            term.push_back(product(t.output, v));
          }
          normalize(&term);
          result = result ? intersect(*result, term) : std::move(term);
        }
        cur[q] = std::move(result);
      }
      prev = std::move(cur);
    }
    cc_.resize(n);
    for (StateId q = 0; q < n; ++q) {
      if (!prev[q])
        throw SearchBoundExceeded(
            "sampler: state without accepted future inside the bound");
      cc_[q] = std::move(*prev[q]);
    }
  }

  const Sdt& machine() const { return g_; }
  int bound() const { return bound_; }
  const std::vector<Str>& access() const { return access_; }

  StateId state_at(const Str& u) const {
    StateId q = g_.initial();
    for (char c : u) {
      auto t = g_.delta(q, c);
      if (!t) throw Error("sampler: access string leaves the machine");
      q = *t;
    }
    return q;
  }

  const StringSet& cc_max(StateId q) const { return cc_[q].back(); }

  std::vector<const StringSet*> path_factors(const Str& u) const {
    std::vector<const StringSet*> factors;
    StateId q = g_.initial();
    for (char c : u) {
      const auto& out = g_.transitions_from(q);
      auto it = out.find(c);
      if (it == out.end()) throw Error("sampler: access string leaves the machine");
      factors.push_back(&it->second.output);
      q = it->second.target;
    }
    return factors;
  }

  StringSet path_product(const Str& u) const {
    StringSet acc(g_.output_alphabet(), {Str()});
    for (const StringSet* f : path_factors(u)) {
      if (acc.size() * f->size() > cap_)
        throw SearchBoundExceeded("sampler: path product exceeds cap");
      acc = product(acc, *f);
    }
    return acc;
  }

  // The committed prefix antichain of x: product of the path output and the
  // greatest common valid antichain of the state's futures.
  StringSet pi_fm(const Str& u) const {
    return product(path_product(u), cc_max(state_at(u)));
  }

  // The antichain the learner has committed when it starts processing x.
  StringSet frame_of(const Str& x) const {
    if (x.empty()) return StringSet(g_.output_alphabet(), {Str()});
    return pi_fm(truncated(x));
  }

  // All antichains valid for every bounded future translation tree of x.
  Chain common_chain(const Str& x) const {
    Chain chain =
        product_chain(path_factors(x), nullptr, g_.output_alphabet(), cap_);
    const StringSet pi = path_product(x);
    for (const StringSet& v : cc_[state_at(x)]) {
      if (pi.size() * v.size() > cap_)
        throw SearchBoundExceeded("sampler: antichain product exceeds cap");
      chain.push_back(product(pi, v));
    }
    normalize(&chain);
    return chain;
  }

  // vac(f(xhat)) for an accepted input, via the factor decomposition.
  Chain full_chain(const Str& xhat) const {
    const StringSet* acc = g_.accept(state_at(xhat));
    if (!acc) throw Error("sampler: full_chain needs an accepted input");
    return product_chain(path_factors(xhat), acc, g_.output_alphabet(), cap_);
  }

  // Accepted extensions z of u with |z| <= |u| + bound, llex order; stops
  // early when the visitor returns false.
  template <typename F>
  void for_each_accepted_extension(const Str& u, F&& visit) const {
    std::vector<std::pair<Str, StateId>> layer{{u, state_at(u)}};
    for (int len = 0; len <= bound_; ++len) {
      for (const auto& [z, q] : layer)
        if (g_.accept(q) && !visit(z)) return;
      std::vector<std::pair<Str, StateId>> next;
      for (const auto& [z, q] : layer) {
        for (char c : g_.input_alphabet().symbols()) {
          auto t = g_.delta(q, c);
          if (t) next.emplace_back(z + c, *t);
        }
      }
      layer = std::move(next);
      if (layer.empty()) return;
    }
  }

  // The unique member of pi_fm(u) that prefixes z's translation y.
  std::optional<Str> matched_prefix(const Str& u, const Str& y) const {
    std::size_t pos = 0;
    for (const StringSet* f : path_factors(u)) {
      bool advanced = false;
      for (const Str& w : f->members()) {
        if (y.compare(pos, w.size(), w) == 0) {
          pos += w.size();
          advanced = true;
          break;
        }
      }
      if (!advanced) return std::nullopt;
    }
    for (const Str& w : cc_max(state_at(u)).members()) {
      if (y.compare(pos, w.size(), w) == 0) return y.substr(0, pos + w.size());
    }
    return std::nullopt;
  }

  StringSet translate_capped(const Str& x) const {
    try {
      auto result = translate(g_, x, cap_);
      if (!result) throw Error("sampler: translate of a non-domain string");
      return *result;
    } catch (const PairCapExceeded& e) {
      throw SearchBoundExceeded(std::string("sampler: ") + e.what());
    }
  }

  // The llex-least member of f(z): per-slot least choices.
  Str least_translation(const Str& z) const {
    const StringSet* acc = g_.accept(state_at(z));
    if (!acc) throw Error("sampler: least_translation of a non-domain string");
    return least_path_output(g_, z) + acc->llex_least();
  }

  // The base set W: minimal access strings and their one-symbol extensions.
  std::vector<Str> base_strings() const {
    std::set<Str> base;
    for (StateId q = 0; q < g_.state_count(); ++q) {
      base.insert(access_[q]);
      for (const auto& [c, t] : g_.transitions_from(q))
        base.insert(access_[q] + c);
    }
    std::vector<Str> out(base.begin(), base.end());
    std::sort(out.begin(), out.end(), LlexLess{g_.input_alphabet()});
    return out;
  }

 private:
  const Sdt& g_;
  int bound_;
  std::size_t cap_;
  std::vector<Str> access_;
  std::vector<Chain> cc_;
};

int resolve_bound(const Sdt& g, const SamplerOptions& options) {
  return options.future_bound > 0 ? options.future_bound
                                  : default_future_bound(g);
}

void require_valid(const Sdt& g, const char* op) {
  std::vector<std::string> bad = validate(g);
  if (!bad.empty())
    throw Error(std::string(op) + ": invalid machine: " + bad[0]);
}

// Mirrors the per-pair check of test_vps: a pair <z, zfull> refutes the
// behind-frame candidate p when the candidate cannot cover its remainder or
// some swapped translation is false.
bool refutes_candidate(const Sdt& g, const Str& x_least, const StringSet& p,
                       const Str& z, const Str& zfull) {
  if (!is_prefix(x_least, zfull)) return false;
  const Str rest = zfull.substr(x_least.size());
  const Str* r = nullptr;
  for (const Str& m : p.members()) {
    if (is_prefix(m, rest)) {
      r = &m;
      break;
    }
  }
  if (!r) return true;
  const Str w = rest.substr(r->size());
  for (const Str& q : p.members())
    if (!contains_translation(g, z, x_least + q + w)) return true;
  return false;
}

// N0 for one base string.
void build_n0(const FmAnalysis& fm, const Str& x, Dataset* out) {
  const Sdt& g = fm.machine();
  const StringSet frame = fm.frame_of(x);
  auto xhat = least_completion(g, x);
  if (!xhat)
    throw SearchBoundExceeded("n0: no accepted extension of a base string");
  const StringSet fx = fm.translate_capped(*xhat);
  const StringSet behind = left_quotient(frame, fx);
  const Str big_x = behind.llex_least();
  const Str z = frame.llex_least();
  out->add(*xhat, z + big_x);

  // Prefixes of the least translation that no valid antichain of the
  // quotient tree contains need a witnessing pair each.
  const StringSet* q_acc = g.accept(fm.state_at(*xhat));
  std::vector<const StringSet*> factors = fm.path_factors(*xhat);
  Chain behind_chain;
  {
    // vac(behind) = quotients of the upper part of vac(f(xhat)).
    Chain full = product_chain(factors, q_acc, g.output_alphabet(),
                               kDefaultPairCap);
    for (const StringSet& v : full) {
      StringSet rest = left_quotient(frame, v);
      if (!rest.empty() && product(frame, rest) == v)
        behind_chain.push_back(std::move(rest));
    }
    normalize(&behind_chain);
  }
  std::set<Str> allowed;
  for (const StringSet& v : behind_chain)
    for (const Str& m : v.members()) allowed.insert(m);

  MachineOracle oracle(g);
  for (std::size_t k = 1; k < big_x.size(); ++k) {
    const Str x0 = big_x.substr(0, k);
    if (allowed.count(x0)) continue;
    // Find the llex-least extra pair under which the candidate assembly
    // for x0 collapses.
    bool found = false;
    for (const Str& t : behind.members()) {
      if (t == big_x) continue;
      Dataset probe(g.input_alphabet(), g.output_alphabet());
      probe.add(*xhat, z + big_x);
      probe.add(*xhat, z + t);
      bool alive = false;
      for (const StringSet& cand : vac_candidates(probe, x, z, oracle)) {
        if (cand.contains(x0)) {
          alive = true;
          break;
        }
      }
      if (!alive) {
        out->add(*xhat, z + t);
        found = true;
        break;
      }
    }
    if (!found)
      throw SearchBoundExceeded("n0: no single-pair witness for a prefix");
  }
}

// N1 for one base string.
void build_n1(const FmAnalysis& fm, const Str& x, Dataset* out) {
  const Sdt& g = fm.machine();
  auto xhat = least_completion(g, x);
  if (!xhat) return;
  const Chain common = fm.common_chain(x);
  const Chain full = fm.full_chain(*xhat);
  const StringSet frame = fm.frame_of(x);
  const Str x_least = frame.llex_least();

  for (const StringSet& spurious : full) {
    if (std::find(common.begin(), common.end(), spurious) != common.end())
      continue;
    StringSet p_behind = left_quotient(frame, spurious);
    if (product(frame, p_behind) != spurious) continue;  // below the frame
    bool found = false;
    fm.for_each_accepted_extension(x, [&](const Str& z) {
      const StringSet fz = fm.translate_capped(z);
      for (const Str& zfull : fz.members()) {
        if (refutes_candidate(g, x_least, p_behind, z, zfull)) {
          out->add(z, zfull);
          found = true;
          return false;
        }
      }
      return true;
    });
    if (!found)
      throw SearchBoundExceeded("n1: no refuting pair inside the bound");
  }
}

// One distinguishing pair for an ordered state pair, or nothing when the
// bounded futures agree.
void build_n2_pair(const FmAnalysis& fm, const Str& u, const Str& x,
                   Dataset* out) {
  const Sdt& g = fm.machine();
  const Str x0 = fm.pi_fm(u).llex_least();
  const Str y0 = fm.pi_fm(x).llex_least();

  struct Hit {
    Str z, zfull;
  };
  std::optional<Hit> best;
  auto consider = [&](const Str& z, const Str& zfull) {
    if (!best) {
      best = Hit{z, zfull};
      return;
    }
    const Alphabet& a = g.input_alphabet();
    const Alphabet& b = g.output_alphabet();
    if (llex_cmp(a, z, best->z) < 0 ||
        (z == best->z && llex_cmp(b, zfull, best->zfull) < 0))
      best = Hit{z, zfull};
  };

  // Pairs about extensions of u trigger queries rooted at x and vice versa.
  fm.for_each_accepted_extension(u, [&](const Str& z) {
    const Str probe_input = x + z.substr(u.size());
    if (!in_domain(g, probe_input)) {
      consider(z, fm.least_translation(z));
      return false;
    }
    const StringSet fz = fm.translate_capped(z);
    for (const Str& zfull : fz.members()) {
      auto matched = fm.matched_prefix(u, zfull);
      if (!matched) continue;
      if (!contains_translation(g, probe_input,
                                y0 + zfull.substr(matched->size()))) {
        consider(z, zfull);
        return false;
      }
    }
    return true;
  });
  fm.for_each_accepted_extension(x, [&](const Str& z) {
    if (best && llex_cmp(g.input_alphabet(), best->z, z) <= 0) return false;
    const Str probe_input = u + z.substr(x.size());
    if (!in_domain(g, probe_input)) {
      consider(z, fm.least_translation(z));
      return false;
    }
    const StringSet fz = fm.translate_capped(z);
    for (const Str& zfull : fz.members()) {
      auto matched = fm.matched_prefix(x, zfull);
      if (!matched) continue;
      if (!contains_translation(g, probe_input,
                                x0 + zfull.substr(matched->size()))) {
        consider(z, zfull);
        return false;
      }
    }
    return true;
  });
  if (best) out->add(best->z, best->zfull);
}

// One llex-least full translation per output of a transition.
void build_n2_star(const FmAnalysis& fm, Dataset* out) {
  const Sdt& g = fm.machine();
  for (StateId q = 0; q < g.state_count(); ++q) {
    const Str& base = fm.access()[q];
    for (const auto& [c, t] : g.transitions_from(q)) {
      auto v = least_completion(g, base + c);
      if (!v) continue;
      // Slot outputs along p_v, with the slots using this transition noted.
      std::vector<const StringSet*> slots;
      std::vector<std::size_t> uses;
      StateId cur = g.initial();
      for (std::size_t i = 0; i < v->size(); ++i) {
        const auto& edge = g.transitions_from(cur).at((*v)[i]);
        slots.push_back(&edge.output);
        if (cur == q && (*v)[i] == c) uses.push_back(i);
        cur = edge.target;
      }
      const StringSet* acc = g.accept(cur);
      for (const Str& o : t.output.members()) {
        std::optional<Str> least;
        for (std::size_t use : uses) {
          Str candidate;
          for (std::size_t i = 0; i < slots.size(); ++i)
            candidate += (i == use) ? o : slots[i]->llex_least();
          candidate += acc->llex_least();
          if (!least ||
              llex_cmp(g.output_alphabet(), candidate, *least) < 0)
            least = std::move(candidate);
        }
        if (least) out->add(*v, *least);
      }
    }
    // The #-transition: one pair per accept output.
    if (const StringSet* acc = g.accept(q)) {
      const Str prefix = least_path_output(g, base);
      for (const Str& o : acc->members()) out->add(base, prefix + o);
    }
  }
}

Dataset build_component(const Sdt& g, const SamplerOptions& options,
                        void (*builder)(const FmAnalysis&, const Str&,
                                        Dataset*)) {
  require_valid(g, "sampler");
  FmAnalysis fm(g, resolve_bound(g, options), options.cap);
  const std::vector<Str> bases = fm.base_strings();
  std::vector<Dataset> parts(bases.size(),
                             Dataset(g.input_alphabet(), g.output_alphabet()));
  std::vector<std::string> errors(bases.size());
  parallel_for(bases.size(), [&](std::size_t i) {
    try {
      builder(fm, bases[i], &parts[i]);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  Dataset out(g.input_alphabet(), g.output_alphabet());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (!errors[i].empty()) throw SearchBoundExceeded(errors[i]);
    out.merge(parts[i]);
  }
  return out;
}

}  // namespace

Dataset n0(const Sdt& g, const SamplerOptions& options) {
  return build_component(g, options, &build_n0);
}

Dataset n1(const Sdt& g, const SamplerOptions& options) {
  return build_component(g, options, &build_n1);
}

Dataset n2(const Sdt& g, const SamplerOptions& options) {
  require_valid(g, "sampler");
  FmAnalysis fm(g, resolve_bound(g, options), options.cap);
  const std::vector<Str> bases = fm.base_strings();

  // Every (other state, base string) pair needs its distinguishing example.
  struct Task {
    Str u, x;
  };
  std::vector<Task> tasks;
  for (const Str& x : bases) {
    StateId sx = fm.state_at(x);
    for (StateId q = 0; q < g.state_count(); ++q)
      if (q != sx) tasks.push_back({fm.access()[q], x});
  }
  std::vector<Dataset> parts(tasks.size(),
                             Dataset(g.input_alphabet(), g.output_alphabet()));
  std::vector<std::string> errors(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    try {
      build_n2_pair(fm, tasks[i].u, tasks[i].x, &parts[i]);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  Dataset out(g.input_alphabet(), g.output_alphabet());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) throw SearchBoundExceeded(errors[i]);
    out.merge(parts[i]);
  }
  build_n2_star(fm, &out);
  return out;
}

Dataset characteristic_sample(const Sdt& g, const SamplerOptions& options) {
  Dataset cs = n0(g, options);
  cs.merge(n1(g, options));
  cs.merge(n2(g, options));
  return cs;
}

}  // namespace sdt
