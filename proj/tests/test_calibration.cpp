// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"

namespace {

using namespace bbtest;

TEST(CalibrateWeight, Monotone) {
  EXPECT_GT(calibrate_weight(4.0, 1.5, -3.0), calibrate_weight(0.0, 1.5, -3.0));
}

TEST(CalibrateWeight, Midpoint) {
  EXPECT_DOUBLE_EQ(calibrate_weight(2.0, 1.5, -3.0), 0.5);
}

TEST(CalibrateWeight, ClosedForm) {
  for (int raw = 0; raw <= 4; ++raw) {
    const double expected = 1.0 / (1.0 + std::exp(-(1.5 * raw - 3.0)));
    EXPECT_NEAR(calibrate_weight(raw, 1.5, -3.0), expected, 1e-12);
  }
}

TEST(CalibrateWeight, RejectsOutOfRange) {
  EXPECT_THROW(calibrate_weight(4.5, 1.0, 0.0), ConfigError);
  EXPECT_THROW(calibrate_weight(-0.1, 1.0, 0.0), ConfigError);
}

TEST(CalibrationParams, Multipliers) {
  CalibrationParams p;
  p.backward_multiplier = 0.1;
  p.mutex_multiplier = 2.0;
  EXPECT_DOUBLE_EQ(p.multiplier(ConstraintKind::Forward), 1.0);
  EXPECT_DOUBLE_EQ(p.multiplier(ConstraintKind::Backward), 0.1);
  EXPECT_DOUBLE_EQ(p.multiplier(ConstraintKind::MutexHalf), 2.0);
  p.lambda = 0.0;
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(ApplyCalibration, RewritesWeights) {
  ConstraintGraph g;
  g.add(rule(isa("dog"), isa("mammal"), Label::True, 0.0, ConstraintKind::Forward, 2.0));
  apply_calibration(g, CalibrationParams{1.5, -3.0});
  EXPECT_DOUBLE_EQ(g.constraints()[0].weight, 0.5);
}

TEST(GridSearch, RecoversPlantedLambda) {
  const auto cases = planted_cases();
  const auto grid = planted_grid();
  const auto result = grid_search(grid, cases);
  EXPECT_DOUBLE_EQ(result.best.lambda, 0.5);
  EXPECT_DOUBLE_EQ(result.best_f1, 1.0);

  // Exhaustive check of the objective over the grid.
  double best = -1.0;
  std::vector<double> argmax;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto point = evaluate_params(cases, grid.point(i));
    if (point.f1 > best + 1e-12) {
      best = point.f1;
      argmax = {grid.point(i).lambda};
    } else if (std::abs(point.f1 - best) <= 1e-12) {
      argmax.push_back(grid.point(i).lambda);
    }
  }
  EXPECT_EQ(argmax, std::vector<double>{0.5});
}

TEST(GridSearch, IndependentOfJobsAndCaseOrder) {
  auto cases = planted_cases();
  GridSpec grid;
  const auto one = grid_search(grid, cases, 1);
  std::reverse(cases.begin(), cases.end());
  const auto four = grid_search(grid, cases, 4);
  EXPECT_EQ(one.best, four.best);
  EXPECT_EQ(one.trace, four.trace);
}

TEST(GridSearch, SinglePoint) {
  GridSpec grid = planted_grid();
  grid.lambda = {2.0};
  const auto r = grid_search(grid, planted_cases());
  EXPECT_DOUBLE_EQ(r.best.lambda, 2.0);
  EXPECT_EQ(r.trace.size(), 1U);
}

TEST(GridSearch, TraceCoversGrid) {
  GridSpec grid;
  const auto r = grid_search(grid, planted_cases());
  EXPECT_EQ(r.trace.size(), grid.a.size() * grid.b.size() * grid.lambda.size() *
                                grid.backward_multiplier.size() *
                                grid.mutex_multiplier.size());
  EXPECT_EQ(r.trace.size(), grid.size());
}

TEST(GridSearch, RejectsEmptyInputs) {
  EXPECT_THROW(grid_search(GridSpec{}, {}), ConfigError);
  GridSpec grid;
  grid.lambda.clear();
  EXPECT_THROW(grid_search(grid, planted_cases()), ConfigError);
}

}  // namespace
