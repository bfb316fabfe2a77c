// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

struct ConsistencyReport {
  std::size_t applicable_count = 0;
  std::size_t violated_count = 0;
  double tau = 0.0;
  double consistency = 1.0;
  /// Indices into the grounded constraint span passed to consistency().
  std::vector<std::size_t> violated_constraints;
};

/// Conditional violation rate over constraints whose premise the bank
/// believes true. A believed-true premise with an absent conclusion counts
/// as violated.
ConsistencyReport consistency(const BeliefBank& bank,
                              std::span<const GroundedConstraint> grounded);

/// Whether the constraint is violated when the premise holds `premise` and
/// the conclusion holds `conclusion`.
constexpr bool violates(const GroundedConstraint& c, Label premise,
                        Label conclusion) {
  return is_true(premise) && conclusion != c.conclusion_label;
}

struct AccuracyReport {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t true_negatives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  /// Set when no gold statement was found in the bank.
  bool empty = false;
};

using GoldLabels = std::map<StatementKey, Label>;

/// Precision, recall and F1 with T as the positive class, scored over the
/// statements present in both `bank` and `gold`.
AccuracyReport f1_true(const BeliefBank& bank, const GoldLabels& gold);

/// Fills precision/recall/f1 from the counts.
void finalize_scores(AccuracyReport& report);

}  // namespace beliefbank
