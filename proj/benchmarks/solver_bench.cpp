// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "beliefbank/beliefbank.hpp"

namespace bb = beliefbank;

namespace {

void BM_SolveExactRandom(benchmark::State& state) {
  const auto vars = static_cast<std::size_t>(state.range(0));
  const auto problem = bb::random_problem(17, vars, 2 * vars);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bb::solve_exact(problem));
  }
}
BENCHMARK(BM_SolveExactRandom)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_SolveLocalRandom(benchmark::State& state) {
  const auto vars = static_cast<std::size_t>(state.range(0));
  const auto problem = bb::random_problem(17, vars, 3 * vars);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bb::solve_local(problem, 1, 10000));
  }
}
BENCHMARK(BM_SolveLocalRandom)->Arg(20)->Arg(100)->Arg(400);

void BM_BruteForce(benchmark::State& state) {
  const auto problem = bb::random_problem(17, 12, 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bb::brute_force_maxsat(problem));
  }
}
BENCHMARK(BM_BruteForce);

struct DeskEntity {
  bb::BeliefBank bank;
  std::vector<bb::GroundedConstraint> grounded;
  bb::CalibrationParams params;

  DeskEntity() {
    const auto data = bb::generate(bb::TaxonomySpec::desk());
    bb::SyntheticOracle oracle(
        bb::SyntheticOracleProfile::tuned(0.97, 0.60, data.true_fraction(), 1),
        data.gold_table(), data.graph);
    const auto& entity = data.evaluation_entities.front();
    bank = bb::query_raw(oracle, data.facts_for(entity), entity);
    grounded = bb::restrict_constraints(
        std::span<const bb::GroundedConstraint>(bb::instantiate_graph(data.graph, entity)),
        [&](const bb::StatementKey& k) { return bank.contains(k); });
    bb::apply_calibration(grounded, params);
  }
};

void BM_EncodeAndSolveDeskEntity(benchmark::State& state) {
  const DeskEntity e;
  for (auto _ : state) {
    const auto problem = bb::encode(e.bank, e.grounded, e.params);
    benchmark::DoNotOptimize(bb::solve_exact(problem));
  }
}
BENCHMARK(BM_EncodeAndSolveDeskEntity);

void BM_SelectRelevantDeskEntity(benchmark::State& state) {
  const DeskEntity e;
  const bb::GroundedGraph graph(e.grounded);
  const auto& query = e.bank.begin()->second.statement;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bb::select_relevant(e.bank, graph, query, 3));
  }
}
BENCHMARK(BM_SelectRelevantDeskEntity);

}  // namespace

BENCHMARK_MAIN();
