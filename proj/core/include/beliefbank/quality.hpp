// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Independent reference implementations used to check the solvers and
// metrics. Nothing here shares code paths with maxsat.cpp or metrics.cpp.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/maxsat.hpp"
#include "beliefbank/metrics.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

inline constexpr std::size_t kBruteForceCap = 20;

struct BruteForceResult {
  double cost = 0.0;
  /// Every minimum-cost assignment (within a 1e-12 relative band), as bit
  /// vectors in variable order, enumerated in increasing binary order.
  std::vector<std::vector<bool>> optima;
};

/// Enumerates all 2^n assignments. Hard clauses make an assignment
/// infeasible. Throws SizingError above kBruteForceCap variables.
BruteForceResult brute_force_maxsat(const MaxSatProblem& problem);

/// Falsified soft weight of `bits`, computed clause by clause.
double brute_force_cost(const MaxSatProblem& problem,
                        const std::vector<bool>& bits);

/// Random problem with `variables` variables: one unit clause per variable
/// of random sign plus `binary_clauses` two-literal clauses.
MaxSatProblem random_problem(std::uint64_t seed, std::size_t variables,
                             std::size_t binary_clauses);

/// A bank and grounded constraints over one synthetic entity.
struct Scenario {
  BeliefBank bank;
  std::vector<GroundedConstraint> constraints;
};

/// `statements` random beliefs and `constraints` grounded constraints
/// between them, mixing all three kinds. With `satisfiable` every
/// constraint holds under some assignment of the statements.
Scenario random_scenario(std::uint64_t seed, std::size_t statements,
                         std::size_t constraints, bool satisfiable = false);

/// Double-loop recount of the consistency definition.
ConsistencyReport recount_consistency(const BeliefBank& bank,
                                      const std::vector<GroundedConstraint>& grounded);

/// Direct recount of true-class precision, recall and F1.
AccuracyReport recount_f1(const BeliefBank& bank, const GoldLabels& gold);

struct FuzzOptions {
  std::size_t statements = 12;
  std::size_t constraints = 18;
  double lambda = 1.0;
  bool satisfiable = false;
  std::size_t jobs = 1;
};

struct OracleCheckReport {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  double max_cost_gap = 0.0;
  /// Instances where solving lowered consistency. Minimum weighted cost
  /// does not imply maximum consistency, so these are tallied apart from
  /// mismatches.
  std::size_t consistency_regressions = 0;
  /// Description plus weighted-CNF dump of each failing instance.
  std::vector<std::string> dumps;
};

/// For `count` seeds from `first_seed`: checks encode/metrics agreement,
/// exact-solver optimality against brute force, and that solving never
/// lowers consistency (and reaches 1 when `satisfiable` and lambda is
/// tiny). Failures are recorded, not thrown.
OracleCheckReport fuzz_pipeline(std::uint64_t first_seed, std::size_t count,
                                const FuzzOptions& options = {});

}  // namespace beliefbank
