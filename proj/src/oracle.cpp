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

#include "sdt/oracle.hpp"

namespace sdt {

MachineOracle::MachineOracle(Sdt target) : target_(std::move(target)) {
  std::vector<std::string> bad = validate(target_);
  if (!bad.empty()) throw Error("machine_oracle: invalid target: " + bad[0]);
}

bool MachineOracle::query(const Str& x, const Str& y) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(x, y);
  auto it = query_cache_.find(key);
  if (it != query_cache_.end()) {
    ++stats_.cache_hits;
    return it->second;
  }
  bool ans = contains_translation(target_, x, y);
  query_cache_.emplace(std::move(key), ans);
  ++stats_.translation_queries;
  return ans;
}

bool MachineOracle::dk(const Str& x) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = dk_cache_.find(x);
  if (it != dk_cache_.end()) {
    ++stats_.cache_hits;
    return it->second;
  }
  bool ans = in_domain(target_, x);
  dk_cache_.emplace(x, ans);
  ++stats_.domain_queries;
  return ans;
}

OracleStats MachineOracle::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

BudgetedOracle::BudgetedOracle(Oracle& inner, std::uint64_t max_queries)
    : inner_(inner), budget_(max_queries) {}

void BudgetedOracle::charge_query(const std::pair<Str, Str>& key) {
  std::lock_guard<std::mutex> lock(mu_);
  if (seen_queries_.count(key)) return;
  if (seen_queries_.size() + seen_dk_.size() >= budget_)
    throw BudgetExhausted("query budget of " + std::to_string(budget_) +
                          " distinct questions exhausted");
  seen_queries_.insert(key);
}

void BudgetedOracle::charge_dk(const Str& key) {
  std::lock_guard<std::mutex> lock(mu_);
  if (seen_dk_.count(key)) return;
  if (seen_queries_.size() + seen_dk_.size() >= budget_)
    throw BudgetExhausted("query budget of " + std::to_string(budget_) +
                          " distinct questions exhausted");
  seen_dk_.insert(key);
}

bool BudgetedOracle::query(const Str& x, const Str& y) {
  charge_query({x, y});
  return inner_.query(x, y);
}

bool BudgetedOracle::dk(const Str& x) {
  charge_dk(x);
  return inner_.dk(x);
}

OracleStats BudgetedOracle::stats() const { return inner_.stats(); }

}  // namespace sdt
