// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/calibration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>
#include <tuple>

#include "beliefbank/errors.hpp"
#include "beliefbank/maxsat.hpp"

namespace beliefbank {

void CalibrationParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("lambda must be positive, got " + std::to_string(lambda));
  }
  if (!(backward_multiplier >= 0.0) || !(mutex_multiplier >= 0.0)) {
    throw ConfigError("rule multipliers must be non-negative");
  }
  if (!std::isfinite(a) || !std::isfinite(b) ||
      !std::isfinite(backward_multiplier) || !std::isfinite(mutex_multiplier)) {
    throw ConfigError("calibration parameters must be finite");
  }
}

double CalibrationParams::multiplier(ConstraintKind kind) const {
  switch (kind) {
    case ConstraintKind::Forward: return 1.0;
    case ConstraintKind::Backward: return backward_multiplier;
    case ConstraintKind::MutexHalf: return mutex_multiplier;
  }
  return 1.0;
}

double calibrate_weight(double raw_score, double a, double b) {
  if (!(raw_score >= 0.0 && raw_score <= 4.0)) {
    throw ConfigError("raw score " + std::to_string(raw_score) +
                      " outside [0,4]");
  }
  return 1.0 / (1.0 + std::exp(-(a * raw_score + b)));
}

void apply_calibration(ConstraintGraph& graph, const CalibrationParams& params) {
  for (auto& c : graph.mutable_constraints()) {
    c.weight = calibrate_weight(c.raw_score, params.a, params.b);
  }
}

void apply_calibration(std::span<GroundedConstraint> grounded,
                       const CalibrationParams& params) {
  for (auto& c : grounded) {
    c.weight = calibrate_weight(c.raw_score, params.a, params.b);
  }
}

void GridSpec::validate() const {
  const auto check = [](const std::vector<double>& values, const char* name) {
    if (values.empty()) {
      throw ConfigError(std::string("grid list '") + name + "' is empty");
    }
    for (double v : values) {
      if (!std::isfinite(v)) {
        throw ConfigError(std::string("grid list '") + name +
                          "' holds a non-finite value");
      }
    }
  };
  check(a, "a");
  check(b, "b");
  check(lambda, "lambda");
  check(backward_multiplier, "backward_multiplier");
  check(mutex_multiplier, "mutex_multiplier");
  for (std::size_t i = 0; i < size(); ++i) point(i).validate();
}

std::size_t GridSpec::size() const {
  return a.size() * b.size() * lambda.size() * backward_multiplier.size() *
         mutex_multiplier.size();
}

CalibrationParams GridSpec::point(std::size_t index) const {
  CalibrationParams p;
  p.mutex_multiplier = mutex_multiplier[index % mutex_multiplier.size()];
  index /= mutex_multiplier.size();
  p.backward_multiplier = backward_multiplier[index % backward_multiplier.size()];
  index /= backward_multiplier.size();
  p.lambda = lambda[index % lambda.size()];
  index /= lambda.size();
  p.b = b[index % b.size()];
  index /= b.size();
  p.a = a[index % a.size()];
  return p;
}

TracePoint evaluate_params(const std::vector<CalibrationCase>& cases,
                           const CalibrationParams& params) {
  params.validate();
  TracePoint point{params, 0.0, 0.0};
  if (cases.empty()) return point;
  for (const auto& c : cases) {
    auto grounded = c.constraints;
    apply_calibration(grounded, params);
    BeliefBank bank = c.bank;
    const auto solved = solve_exact(encode(bank, grounded, params));
    apply_assignment(bank, solved);
    point.f1 += f1_true(bank, c.gold).f1;
    point.consistency += consistency(bank, grounded).consistency;
  }
  point.f1 /= static_cast<double>(cases.size());
  point.consistency /= static_cast<double>(cases.size());
  return point;
}

namespace {

auto tie_key(const CalibrationParams& p) {
  return std::make_tuple(p.lambda, p.a, p.b, p.lambda, p.backward_multiplier,
                         p.mutex_multiplier);
}

}  // namespace

GridResult grid_search(const GridSpec& grid, std::vector<CalibrationCase> cases,
                       std::size_t jobs) {
  grid.validate();
  if (cases.empty()) throw ConfigError("calibration slice is empty");
  std::stable_sort(cases.begin(), cases.end(),
                   [](const auto& x, const auto& y) { return x.entity < y.entity; });

  GridResult result;
  result.trace.resize(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < result.trace.size(); i = next++) {
      try {
        result.trace[i] = evaluate_params(cases, grid.point(i));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, grid.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  const TracePoint* best = &result.trace.front();
  for (const auto& point : result.trace) {
    if (point.f1 > best->f1 ||
        (point.f1 == best->f1 && tie_key(point.params) < tie_key(best->params))) {
      best = &point;
    }
  }
  result.best = best->params;
  result.best_f1 = best->f1;
  return result;
}

}  // namespace beliefbank
