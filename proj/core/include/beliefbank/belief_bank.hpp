// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beliefbank/types.hpp"

namespace beliefbank {

/// One upsert as recorded in the audit log.
struct AuditEntry {
  std::optional<Belief> previous;
  Belief current;
};

/// Persistent store of beliefs, at most one per statement.
///
/// Single writer; concurrent const access is safe. The experiment runner
/// keeps one bank per entity, so banks never need to be shared across
/// threads while being written.
class BeliefBank {
 public:
  BeliefBank() = default;
  explicit BeliefBank(std::optional<std::string> entity_scope)
      : scope_(std::move(entity_scope)) {}

  /// Inserts or replaces the belief for `belief.statement`. Every call is
  /// appended to the audit log.
  void upsert(Belief belief);

  const Belief* find(const StatementKey& key) const;
  bool contains(const StatementKey& key) const { return find(key) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::map<StatementKey, Belief>& entries() const { return entries_; }
  const std::vector<AuditEntry>& audit_log() const { return audit_; }
  const std::optional<std::string>& scope() const { return scope_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<StatementKey, Belief> entries_;
  std::vector<AuditEntry> audit_;
  std::optional<std::string> scope_;
};

/// Free-function form of BeliefBank::upsert.
inline BeliefBank& upsert_belief(BeliefBank& bank, Belief belief) {
  bank.upsert(std::move(belief));
  return bank;
}

}  // namespace beliefbank
