// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "beliefbank/types.hpp"

namespace beliefbank {

/// Sigmoid scaling of raw constraint scores plus the relative weights the
/// MaxSAT encoding applies to beliefs and to each rule class.
struct CalibrationParams {
  double a = 1.5;   // sigmoid slope
  double b = -3.0;  // sigmoid shift
  double lambda = 1.0;
  double backward_multiplier = 0.25;
  double mutex_multiplier = 1.0;

  /// Throws ConfigError if lambda <= 0 or a multiplier is negative.
  void validate() const;

  /// Per-kind factor applied on top of the calibrated constraint weight.
  double multiplier(ConstraintKind kind) const;

  friend bool operator==(const CalibrationParams&,
                         const CalibrationParams&) = default;
};

/// 1 / (1 + exp(-(a * raw + b))). Throws ConfigError for raw outside [0,4].
double calibrate_weight(double raw_score, double a, double b);

/// Recomputes every constraint weight from its raw score.
void apply_calibration(ConstraintGraph& graph, const CalibrationParams& params);
void apply_calibration(std::span<GroundedConstraint> grounded,
                       const CalibrationParams& params);

}  // namespace beliefbank
