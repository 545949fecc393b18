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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdt/equivalence.hpp"
#include "sdt/learner.hpp"
#include "sdt/oracle.hpp"
#include "sdt/sampler.hpp"

namespace {

sdt::Sdt read_machine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sdt::Error("cannot open " + path);
  sdt::Sdt g = sdt::parse_sdt(in);
  std::vector<std::string> bad = sdt::validate(g);
  if (!bad.empty()) throw sdt::Error(path + ": " + bad.front());
  return g;
}

sdt::Dataset read_dataset(const std::string& path, const sdt::Sdt& machine) {
  std::ifstream in(path);
  if (!in) throw sdt::Error("cannot open " + path);
  return sdt::parse_dataset(in, machine.input_alphabet(),
                            machine.output_alphabet());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw sdt::Error("cannot open " + path + " for writing");
  out << content;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-deterministic transducer toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random machine");
  int gen_states = 2;
  std::uint64_t gen_seed = 1;
  std::string gen_in = "ab", gen_out_alpha = "AB", gen_out_path;
  int gen_max_out_len = 2, gen_max_out_set = 2;
  gen->add_option("--states", gen_states, "number of states before trimming")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--inalpha", gen_in, "input alphabet symbols");
  gen->add_option("--outalpha", gen_out_alpha, "output alphabet symbols");
  gen->add_option("--max-out-len", gen_max_out_len, "max output string length");
  gen->add_option("--max-out-set", gen_max_out_set, "max output set size");
  gen->add_option("--out", gen_out_path, "machine file to write")->required();

  // pairs
  auto* pairs = app.add_subcommand("pairs", "enumerate translation pairs");
  std::string pairs_machine, pairs_out;
  int pairs_max_len = 3;
  std::size_t pairs_cap = sdt::kDefaultPairCap;
  pairs->add_option("machine", pairs_machine, "machine file")->required();
  pairs->add_option("--max-len", pairs_max_len, "maximum input length");
  pairs->add_option("--pair-cap", pairs_cap, "maximum number of pairs");
  pairs->add_option("--out", pairs_out, "dataset file to write")->required();

  // learn
  auto* learn_cmd = app.add_subcommand("learn", "learn a machine from data");
  std::string learn_data, learn_target, learn_out;
  std::uint64_t learn_budget = 0;
  int learn_depth = 0;
  learn_cmd->add_option("dataset", learn_data, "dataset file")->required();
  learn_cmd->add_option("target", learn_target, "oracle-backing machine file")
      ->required();
  learn_cmd->add_option("--query-budget", learn_budget,
                        "distinct-query budget (0 = unlimited)");
  learn_cmd->add_option("--depth", learn_depth,
                        "equivalence check depth (0 = default)");
  learn_cmd->add_option("--out", learn_out, "machine file to write")
      ->required();

  // cs
  auto* cs_cmd = app.add_subcommand("cs", "emit a characteristic sample");
  std::string cs_machine, cs_out;
  int cs_bound = 0;
  cs_cmd->add_option("machine", cs_machine, "machine file")->required();
  cs_cmd->add_option("--bound", cs_bound, "future bound (0 = default)");
  cs_cmd->add_option("--out", cs_out, "dataset file to write")->required();

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "compare two machines");
  std::string equiv_m1, equiv_m2;
  int equiv_depth = 0;
  equiv_cmd->add_option("machine1", equiv_m1)->required();
  equiv_cmd->add_option("machine2", equiv_m2)->required();
  equiv_cmd->add_option("--depth", equiv_depth, "depth (0 = default)");

  // canon
  auto* canon_cmd = app.add_subcommand("canon", "canonicalize a machine");
  std::string canon_machine, canon_out;
  canon_cmd->add_option("machine", canon_machine)->required();
  canon_cmd->add_option("--out", canon_out, "machine file to write")
      ->required();

  // dot
  auto* dot_cmd = app.add_subcommand("dot", "render a machine as DOT");
  std::string dot_machine, dot_out;
  dot_cmd->add_option("machine", dot_machine)->required();
  dot_cmd->add_option("--out", dot_out, "file to write (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      sdt::Sdt g = sdt::random_sdt(gen_states, sdt::Alphabet(gen_in),
                                   sdt::Alphabet(gen_out_alpha),
                                   gen_max_out_len, gen_max_out_set, gen_seed);
      write_file(gen_out_path, sdt::format_sdt(g));
      std::cout << "states: " << g.state_count() << "\n"
                << "edges: " << g.edge_count() << "\n";
    } else if (*pairs) {
      sdt::Sdt g = read_machine(pairs_machine);
      sdt::Dataset d = sdt::enumerate_pairs(g, pairs_max_len, pairs_cap);
      write_file(pairs_out, sdt::format_dataset(d));
      std::cout << "pairs: " << d.size() << "\n";
    } else if (*learn_cmd) {
      sdt::Sdt target = read_machine(learn_target);
      sdt::Dataset d = read_dataset(learn_data, target);
      sdt::MachineOracle oracle(target);
      Timer timer;
      try {
        sdt::Sdt hypothesis = [&] {
          if (learn_budget > 0) {
            sdt::BudgetedOracle budgeted(oracle, learn_budget);
            return sdt::learn(d, budgeted);
          }
          return sdt::learn(d, oracle);
        }();
        int depth = learn_depth > 0
                        ? learn_depth
                        : sdt::default_equiv_depth(hypothesis, target);
        sdt::EquivResult eq = sdt::bounded_equiv(hypothesis, target, depth);
        write_file(learn_out, sdt::format_sdt(hypothesis));
        sdt::OracleStats stats = oracle.stats();
        std::cout << "states: " << hypothesis.state_count() << "\n"
                  << "edges: " << hypothesis.edge_count() << "\n"
                  << "translation_queries: " << stats.translation_queries
                  << "\n"
                  << "domain_queries: " << stats.domain_queries << "\n"
                  << "cache_hits: " << stats.cache_hits << "\n"
                  << "wall_ms: " << timer.ms() << "\n"
                  << "depth: " << depth << "\n"
                  << "equivalent: " << (eq.equivalent ? "true" : "false")
                  << "\n";
        if (!eq.equivalent)
          std::cout << "counterexample: "
                    << (eq.counterexample.empty() ? "-" : eq.counterexample)
                    << "\n";
      } catch (const sdt::Error&) {
        sdt::OracleStats stats = oracle.stats();
        std::cout << "translation_queries: " << stats.translation_queries
                  << "\n"
                  << "domain_queries: " << stats.domain_queries << "\n"
                  << "wall_ms: " << timer.ms() << "\n";
        throw;
      }
    } else if (*cs_cmd) {
      sdt::Sdt g = read_machine(cs_machine);
      sdt::SamplerOptions options;
      options.future_bound = cs_bound;
      sdt::Dataset part0 = sdt::n0(g, options);
      sdt::Dataset part1 = sdt::n1(g, options);
      sdt::Dataset part2 = sdt::n2(g, options);
      sdt::Dataset cs = part0;
      cs.merge(part1);
      cs.merge(part2);
      write_file(cs_out, sdt::format_dataset(cs));
      std::cout << "n0: " << part0.size() << "\n"
                << "n1: " << part1.size() << "\n"
                << "n2: " << part2.size() << "\n"
                << "cs: " << cs.size() << "\n";
    } else if (*equiv_cmd) {
      sdt::Sdt g1 = read_machine(equiv_m1);
      sdt::Sdt g2 = read_machine(equiv_m2);
      int depth =
          equiv_depth > 0 ? equiv_depth : sdt::default_equiv_depth(g1, g2);
      sdt::EquivResult eq = sdt::bounded_equiv(g1, g2, depth);
      std::cout << "isomorphic: " << (sdt::isomorphic(g1, g2) ? "true" : "false")
                << "\n"
                << "depth: " << depth << "\n"
                << "equivalent: " << (eq.equivalent ? "true" : "false") << "\n";
      if (!eq.equivalent)
        std::cout << "counterexample: "
                  << (eq.counterexample.empty() ? "-" : eq.counterexample)
                  << "\n";
    } else if (*canon_cmd) {
      sdt::Sdt g = read_machine(canon_machine);
      sdt::CanonicalReport report = sdt::canonicalize(g);
      write_file(canon_out, sdt::format_sdt(report.machine));
      std::cout << "states: " << report.machine.state_count() << "\n"
                << "rounds: " << report.rounds << "\n"
                << "stable: " << (report.stable ? "true" : "false") << "\n";
    } else if (*dot_cmd) {
      sdt::Sdt g = read_machine(dot_machine);
      std::string text = sdt::to_dot(g);
      if (dot_out.empty())
        std::cout << text;
      else
        write_file(dot_out, text);
    }
  } catch (const sdt::PairCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (count " << e.count() << ")\n";
    return 1;
  } catch (const sdt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
