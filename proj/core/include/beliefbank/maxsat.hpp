// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/calibration_params.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

/// Clause weight marking a hard clause. encode() never emits one.
inline constexpr double kHardWeight = std::numeric_limits<double>::infinity();

struct Literal {
  std::uint32_t var = 0;  // index into MaxSatProblem::variables
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct WeightedClause {
  std::vector<Literal> literals;
  double weight = 1.0;

  bool is_hard() const { return weight == kHardWeight; }
};

struct MaxSatProblem {
  /// Sorted and unique; literal indices refer to this order.
  std::vector<StatementKey> variables;
  std::vector<WeightedClause> clauses;
  double lambda = 1.0;

  std::optional<std::uint32_t> index_of(const StatementKey& key) const;

  /// Throws StructuralError on out-of-range literals, duplicate variables in
  /// a clause, empty clauses or negative weights.
  void validate() const;

  /// Problem over `count` anonymous variables "v000", "v001", ...
  static MaxSatProblem with_variables(std::size_t count);
};

/// Maps a bank and its grounded constraints to weighted MaxSAT.
///
/// Each belief (s, l, w) becomes the unit clause (+s) or (-s) with weight
/// lambda * w. Each grounded constraint (s_i -> s_j, l_j, w) becomes
/// (l_j.s_j OR -s_i) with weight w times the multiplier for its kind.
/// Belief clauses come first, in bank order, followed by one clause per
/// constraint in input order.
MaxSatProblem encode(const BeliefBank& bank,
                     std::span<const GroundedConstraint> grounded,
                     const CalibrationParams& params);

struct Assignment {
  std::map<StatementKey, Label> values;
  /// Total weight of falsified soft clauses.
  double cost = 0.0;
  /// False if some hard clause is falsified.
  bool feasible = true;
  /// Only the exact solver sets this.
  bool optimal = false;

  Label value(const StatementKey& key) const;
};

/// Falsified soft weight and hard-clause feasibility of a bit assignment.
struct Evaluation {
  double cost = 0.0;
  bool feasible = true;
  std::size_t unit_disagreements = 0;
};
Evaluation evaluate(const MaxSatProblem& problem, const std::vector<bool>& bits);

Assignment make_assignment(const MaxSatProblem& problem,
                           const std::vector<bool>& bits);

struct ExactOptions {
  std::size_t variable_cap = 40;
};

/// Branch and bound for a globally minimum-cost assignment.
///
/// Among optimal assignments (costs equal within a 1e-12 relative band) the
/// one falsifying the fewest unit clauses wins, then the lexicographically
/// smallest in variable order with F < T. Throws SizingError above the cap.
Assignment solve_exact(const MaxSatProblem& problem,
                       const ExactOptions& options = {});

struct LocalSearchOptions {
  double noise = 0.2;
};

/// Weighted WalkSAT started from the unit-clause (belief) labels. Returns the
/// best assignment seen within `budget` flips; deterministic in `seed`.
/// Throws ConfigError when budget is zero.
Assignment solve_local(const MaxSatProblem& problem, std::uint64_t seed,
                       std::uint64_t budget,
                       const LocalSearchOptions& options = {});

struct Flip {
  StatementKey key;
  Label from = Label::False;
  Label to = Label::False;
};

/// Relabels every bank belief whose value differs in `assignment`. Flipped
/// beliefs keep their weight and take Solver provenance. Throws
/// StructuralError if the assignment misses a bank statement.
std::vector<Flip> apply_assignment(BeliefBank& bank,
                                   const Assignment& assignment);

/// Weighted-CNF debug dump: comment lines naming each variable, a
/// "p wcnf" header, then one clause per line as weight followed by signed
/// 1-based literals and a terminating 0.
void write_wcnf(std::ostream& out, const MaxSatProblem& problem);

}  // namespace beliefbank
