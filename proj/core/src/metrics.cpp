// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/metrics.hpp"

namespace beliefbank {

ConsistencyReport consistency(const BeliefBank& bank,
                              std::span<const GroundedConstraint> grounded) {
  ConsistencyReport report;
  for (std::size_t i = 0; i < grounded.size(); ++i) {
    const auto& c = grounded[i];
    const Belief* premise = bank.find(c.premise.key());
    if (premise == nullptr || !is_true(premise->label)) continue;
    ++report.applicable_count;
    const Belief* conclusion = bank.find(c.conclusion.key());
    if (conclusion == nullptr ||
        violates(c, premise->label, conclusion->label)) {
      ++report.violated_count;
      report.violated_constraints.push_back(i);
    }
  }
  if (report.applicable_count > 0) {
    report.tau = static_cast<double>(report.violated_count) /
                 static_cast<double>(report.applicable_count);
  }
  report.consistency = 1.0 - report.tau;
  return report;
}

void finalize_scores(AccuracyReport& r) {
  const auto tp = static_cast<double>(r.true_positives);
  const auto predicted = static_cast<double>(r.true_positives + r.false_positives);
  const auto actual = static_cast<double>(r.true_positives + r.false_negatives);
  r.precision = predicted > 0 ? tp / predicted : 0.0;
  r.recall = actual > 0 ? tp / actual : 0.0;
  const double sum = r.precision + r.recall;
  r.f1 = sum > 0 ? 2.0 * r.precision * r.recall / sum : 0.0;
}

AccuracyReport f1_true(const BeliefBank& bank, const GoldLabels& gold) {
  AccuracyReport report;
  std::size_t scored = 0;
  for (const auto& [key, gold_label] : gold) {
    const Belief* belief = bank.find(key);
    if (belief == nullptr) continue;
    ++scored;
    const bool predicted = is_true(belief->label);
    const bool actual = is_true(gold_label);
    if (predicted && actual) ++report.true_positives;
    else if (predicted) ++report.false_positives;
    else if (actual) ++report.false_negatives;
    else ++report.true_negatives;
  }
  report.empty = scored == 0;
  finalize_scores(report);
  return report;
}

}  // namespace beliefbank
