// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"

namespace {

using namespace bbtest;

CalibrationParams unit_params() {
  CalibrationParams p;
  p.lambda = 1.0;
  p.backward_multiplier = 1.0;
  p.mutex_multiplier = 1.0;
  return p;
}

MaxSatProblem two_vars() {
  auto p = MaxSatProblem::with_variables(2);
  p.clauses.push_back({{{0, true}}, 1.0});
  p.clauses.push_back({{{1, true}}, 0.3});
  p.clauses.push_back({{{1, false}, {0, false}}, 2.0});
  return p;
}

TEST(Encode, BeliefBecomesUnitClause) {
  BeliefBank bank;
  bank.upsert(belief(isa("dog"), "poodle", Label::True, 0.9));
  const auto p = encode(bank, {}, unit_params());
  ASSERT_EQ(p.clauses.size(), 1U);
  ASSERT_EQ(p.clauses[0].literals.size(), 1U);
  EXPECT_TRUE(p.clauses[0].literals[0].positive);
  EXPECT_DOUBLE_EQ(p.clauses[0].weight, 0.9);
}

TEST(Encode, LambdaScalesBeliefs) {
  BeliefBank bank;
  bank.upsert(belief(isa("dog"), "poodle", Label::False, 0.8));
  auto params = unit_params();
  params.lambda = 0.5;
  const auto p = encode(bank, {}, params);
  EXPECT_FALSE(p.clauses[0].literals[0].positive);
  EXPECT_DOUBLE_EQ(p.clauses[0].weight, 0.4);
}

TEST(Encode, ForwardRuleClause) {
  ConstraintGraph g;
  const auto tail = make_template(Relation::HasA, "tail");
  g.add(rule(isa("dog"), tail, Label::True, 0.8));
  BeliefBank bank;
  bank.upsert(belief(isa("dog"), "poodle", Label::True, 0.9));
  bank.upsert(belief(tail, "poodle", Label::True, 0.9));
  const auto grounded = instantiate_graph(g, "poodle");
  const auto p = encode(bank, grounded, unit_params());
  ASSERT_EQ(p.clauses.size(), 3U);
  const auto& c = p.clauses[2];
  const auto dog = *p.index_of(grounded[0].premise.key());
  const auto has_tail = *p.index_of(grounded[0].conclusion.key());
  ASSERT_EQ(c.literals.size(), 2U);
  EXPECT_EQ(c.literals[0], (Literal{has_tail, true}));
  EXPECT_EQ(c.literals[1], (Literal{dog, false}));
  EXPECT_DOUBLE_EQ(c.weight, 0.8);
}

TEST(Encode, MutexHalfUsesMultiplier) {
  ConstraintGraph g;
  add_mutex(g, isa("bird"), isa("fish"), 1.0);
  BeliefBank bank;
  bank.upsert(belief(isa("bird"), "swallow", Label::True, 0.9));
  bank.upsert(belief(isa("fish"), "swallow", Label::False, 0.9));
  auto params = unit_params();
  params.mutex_multiplier = 2.0;
  const auto grounded = instantiate_graph(g, "swallow");
  const auto p = encode(bank, grounded, params);
  const auto& c = p.clauses[2];
  EXPECT_FALSE(c.literals[0].positive);
  EXPECT_FALSE(c.literals[1].positive);
  EXPECT_DOUBLE_EQ(c.weight, 2.0);
}

TEST(Encode, FalsifiedClausesMatchViolations) {
  FuzzOptions options;
  const auto report = fuzz_pipeline(7000, 100, options);
  EXPECT_EQ(report.mismatches, 0U);
}

TEST(SolveExact, SmallWorkedExample) {
  const auto p = two_vars();
  const auto a = solve_exact(p);
  EXPECT_EQ(a.value(p.variables[0]), Label::True);
  EXPECT_EQ(a.value(p.variables[1]), Label::False);
  EXPECT_NEAR(a.cost, 0.3, 1e-12);
  EXPECT_TRUE(a.optimal);
  EXPECT_NEAR(brute_force_maxsat(p).cost, 0.3, 1e-12);
}

TEST(SolveExact, NoClauses) {
  const auto a = solve_exact(MaxSatProblem{});
  EXPECT_TRUE(a.values.empty());
  EXPECT_DOUBLE_EQ(a.cost, 0.0);
}

TEST(SolveExact, ContradictoryUnits) {
  auto p = MaxSatProblem::with_variables(1);
  p.clauses.push_back({{{0, true}}, 0.4});
  p.clauses.push_back({{{0, false}}, 0.7});
  const auto a = solve_exact(p);
  EXPECT_EQ(a.value(p.variables[0]), Label::False);
  EXPECT_NEAR(a.cost, 0.4, 1e-12);
}

TEST(SolveExact, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = random_problem(seed, 12, 24);
    const auto exact = solve_exact(p);
    const auto ref = brute_force_maxsat(p);
    EXPECT_NEAR(exact.cost, ref.cost, 1e-9) << seed;
  }
}

TEST(SolveExact, HardClausesRespected) {
  auto p = two_vars();
  p.clauses.push_back({{{1, true}}, kHardWeight});
  const auto a = solve_exact(p);
  EXPECT_TRUE(a.feasible);
  EXPECT_EQ(a.value(p.variables[1]), Label::True);
  EXPECT_NEAR(a.cost, 1.0, 1e-12);
}

TEST(SolveExact, RefusesAboveCap) {
  const auto p = random_problem(1, 41, 10);
  EXPECT_THROW(solve_exact(p), SizingError);
  EXPECT_NO_THROW(solve_exact(p, {.variable_cap = 41}));
}

TEST(SolveLocal, RejectsZeroBudget) {
  EXPECT_THROW(solve_local(two_vars(), 1, 0), ConfigError);
}

TEST(SolveLocal, DeterministicInSeed) {
  const auto p = random_problem(3, 20, 60);
  const auto x = solve_local(p, 9, 5000);
  const auto y = solve_local(p, 9, 5000);
  EXPECT_EQ(x.values, y.values);
  EXPECT_EQ(x.cost, y.cost);
}

TEST(SolveLocal, NearOptimalOnSmallInstances) {
  std::size_t good = 0;
  const std::size_t n = 200;
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    const auto p = random_problem(seed + 500, 12, 30);
    const double best = solve_exact(p).cost;
    const double got = solve_local(p, seed, 100000).cost;
    if (got <= best * 1.05 + 1e-9) ++good;
  }
  EXPECT_GE(good, 190U);
}

TEST(ApplyAssignment, IdenticalLabelsNoFlips) {
  BeliefBank bank;
  bank.upsert(belief(isa("dog"), "poodle", Label::True, 0.9));
  bank.upsert(belief(isa("cat"), "poodle", Label::False, 0.9));
  const auto p = encode(bank, {}, unit_params());
  const auto a = solve_exact(p);
  EXPECT_TRUE(apply_assignment(bank, a).empty());
}

TEST(ApplyAssignment, SwallowMammalFlips) {
  ConstraintGraph g;
  add_mutex(g, isa("bird"), isa("mammal"), 1.0);
  BeliefBank bank;
  bank.upsert(belief(isa("bird"), "swallow", Label::True, 0.95));
  bank.upsert(belief(isa("mammal"), "swallow", Label::True, 0.55));
  const auto grounded = instantiate_graph(g, "swallow");
  const auto a = solve_exact(encode(bank, grounded, unit_params()));
  const auto flips = apply_assignment(bank, a);
  ASSERT_EQ(flips.size(), 1U);
  const auto mammal = ground_template(isa("mammal"), "swallow").key();
  EXPECT_EQ(flips[0].key, mammal);
  const auto* b = bank.find(mammal);
  EXPECT_EQ(b->label, Label::False);
  EXPECT_EQ(b->provenance, Provenance::Solver);
  EXPECT_DOUBLE_EQ(b->weight, 0.55);
  EXPECT_DOUBLE_EQ(consistency(bank, grounded).consistency, 1.0);
}

TEST(ApplyAssignment, MissingStatementIsStructuralError) {
  BeliefBank bank;
  bank.upsert(belief(isa("dog"), "poodle", Label::True, 0.9));
  EXPECT_THROW(apply_assignment(bank, Assignment{}), StructuralError);
}

TEST(ApplyAssignment, SatisfiableInstancesReachFullConsistency) {
  FuzzOptions options;
  options.lambda = 1e-7;
  options.satisfiable = true;
  const auto report = fuzz_pipeline(100, 100, options);
  EXPECT_EQ(report.mismatches, 0U);
  EXPECT_EQ(report.consistency_regressions, 0U);
}

TEST(ApplyAssignment, TwentyVariableRegressionsAreRare) {
  FuzzOptions options;
  options.statements = 20;
  options.constraints = 30;
  const auto report = fuzz_pipeline(300, 50, options);
  EXPECT_EQ(report.mismatches, 0U);
  RecordProperty("consistency_regressions",
                 static_cast<int>(report.consistency_regressions));
  EXPECT_LE(report.consistency_regressions, 5U);
}

// Fixing one strong violation by raising a weakly held belief can make
// several cheap rules applicable and violated.
TEST(ApplyAssignment, MinimumCostCanLowerConsistency) {
  ConstraintGraph g;
  g.add(rule(isa("a"), isa("b"), Label::True, 1.0));
  g.add(rule(isa("a"), isa("e"), Label::True, 1.0));
  for (const char* c : {"c", "d", "f"}) g.add(rule(isa("b"), isa(c), Label::True, 0.05));
  BeliefBank bank;
  bank.upsert(belief(isa("a"), "x", Label::True, 1.0));
  bank.upsert(belief(isa("e"), "x", Label::True, 1.0));
  bank.upsert(belief(isa("b"), "x", Label::False, 0.1));
  for (const char* c : {"c", "d", "f"}) bank.upsert(belief(isa(c), "x", Label::False, 1.0));
  const auto grounded = instantiate_graph(g, "x");
  const double before = consistency(bank, grounded).consistency;
  apply_assignment(bank, solve_exact(encode(bank, grounded, unit_params())));
  const double after = consistency(bank, grounded).consistency;
  EXPECT_DOUBLE_EQ(before, 0.5);
  EXPECT_DOUBLE_EQ(after, 0.4);
}

TEST(Wcnf, HeaderAndClauses) {
  std::ostringstream out;
  write_wcnf(out, two_vars());
  const auto text = out.str();
  EXPECT_NE(text.find("p wcnf 2 3"), std::string::npos);
  EXPECT_NE(text.find("-2 -1 0"), std::string::npos);
}

TEST(Problem, ValidateRejectsBadLiterals) {
  auto p = MaxSatProblem::with_variables(1);
  p.clauses.push_back({{{3, true}}, 1.0});
  EXPECT_THROW(p.validate(), StructuralError);
  p.clauses = {{{}, 1.0}};
  EXPECT_THROW(p.validate(), StructuralError);
  p.clauses = {{{{0, true}}, -1.0}};
  EXPECT_THROW(p.validate(), StructuralError);
}

}  // namespace
