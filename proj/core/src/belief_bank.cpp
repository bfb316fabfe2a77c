// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/belief_bank.hpp"

#include <algorithm>

namespace beliefbank {

void BeliefBank::upsert(Belief belief) {
  belief.weight = std::clamp(belief.weight, 0.0, 1.0);
  const StatementKey key = belief.statement.key();
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    audit_.push_back({std::nullopt, belief});
    entries_.emplace(key, std::move(belief));
    return;
  }
  audit_.push_back({it->second, belief});
  it->second = std::move(belief);
}

const Belief* BeliefBank::find(const StatementKey& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace beliefbank
