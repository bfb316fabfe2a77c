// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/calibration_params.hpp"
#include "beliefbank/metrics.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

/// Candidate values per parameter. The objective is always post-solve
/// true-class F1.
struct GridSpec {
  std::vector<double> a = {0.5, 1.0, 1.5, 2.0};
  std::vector<double> b = {-4.0, -3.0, -2.0, -1.0};
  std::vector<double> lambda = {0.1, 0.25, 0.5, 1.0, 2.0};
  std::vector<double> backward_multiplier = {0.1, 0.25, 0.5};
  std::vector<double> mutex_multiplier = {0.5, 1.0, 2.0};

  /// Throws ConfigError for an empty list or a non-finite value.
  void validate() const;
  std::size_t size() const;
  /// The i-th point of the cross product, `a` varying slowest.
  CalibrationParams point(std::size_t index) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct TracePoint {
  CalibrationParams params;
  double f1 = 0.0;
  double consistency = 0.0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

/// One calibration entity: raw beliefs, grounded constraints carrying raw
/// scores, and gold labels.
struct CalibrationCase {
  std::string entity;
  BeliefBank bank;
  std::vector<GroundedConstraint> constraints;
  GoldLabels gold;
};

/// Encodes and solves every case exactly under `params`; returns the
/// macro-averaged post-solve F1 and consistency.
TracePoint evaluate_params(const std::vector<CalibrationCase>& cases,
                           const CalibrationParams& params);

struct GridResult {
  CalibrationParams best;
  double best_f1 = 0.0;
  std::vector<TracePoint> trace;  // grid order
};

/// Exhaustive search for the highest F1. Ties go to the smallest lambda,
/// then the smallest (a, b, lambda, backward, mutex) tuple. Points are
/// evaluated on up to `jobs` threads; the result does not depend on `jobs`
/// or on the order of `cases`. Throws ConfigError for no cases.
GridResult grid_search(const GridSpec& grid, std::vector<CalibrationCase> cases,
                       std::size_t jobs = 1);

}  // namespace beliefbank
