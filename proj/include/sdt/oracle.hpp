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

#ifndef SDT_ORACLE_HPP_
#define SDT_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <set>

#include "sdt/transducer.hpp"

namespace sdt {

struct OracleStats {
  std::uint64_t translation_queries = 0;  // distinct [x,y] questions
  std::uint64_t domain_queries = 0;       // distinct DK(x) questions
  std::uint64_t cache_hits = 0;
};

// Answering service for translation queries [x,y] and domain queries DK(x).
// Implementations must be deterministic: repeated identical questions get
// identical answers.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual bool query(const Str& x, const Str& y) = 0;
  virtual bool dk(const Str& x) = 0;
  virtual OracleStats stats() const = 0;
};

// Oracle backed by a hidden target machine. Answers are memoized and the
// stats count distinct questions; safe for concurrent use.
class MachineOracle : public Oracle {
 public:
  explicit MachineOracle(Sdt target);

  bool query(const Str& x, const Str& y) override;
  bool dk(const Str& x) override;
  OracleStats stats() const override;

  const Sdt& target() const { return target_; }

 private:
  Sdt target_;
  mutable std::mutex mu_;
  std::map<std::pair<Str, Str>, bool> query_cache_;
  std::map<Str, bool> dk_cache_;
  OracleStats stats_;
};

// Delegates to the wrapped oracle until the distinct-question budget runs
// out, then throws BudgetExhausted. Memoized repeats are free.
class BudgetedOracle : public Oracle {
 public:
  BudgetedOracle(Oracle& inner, std::uint64_t max_queries);

  bool query(const Str& x, const Str& y) override;
  bool dk(const Str& x) override;
  OracleStats stats() const override;

 private:
  void charge_query(const std::pair<Str, Str>& key);
  void charge_dk(const Str& key);
  Oracle& inner_;
  std::uint64_t budget_;
  mutable std::mutex mu_;
  std::set<std::pair<Str, Str>> seen_queries_;
  std::set<Str> seen_dk_;
};

}  // namespace sdt

#endif  // SDT_ORACLE_HPP_
