// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "fixtures.hpp"

namespace {

using namespace bbtest;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

std::size_t jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

Outcome solver_optimality() {
  const auto start = Clock::now();
  std::size_t agree = 0;
  const std::size_t n = 500;
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    const auto vars = 1 + seed % 12;
    const auto p = random_problem(mix_seed(1, seed), vars, 2 * vars);
    const double exact = solve_exact(p).cost;
    const double ref = brute_force_maxsat(p).cost;
    if (std::abs(exact - ref) <= 1e-9 * std::max(1.0, ref)) ++agree;
  }
  const double secs = seconds_since(start);
  return {agree == n && secs < 60.0,
          fmt("%zu/%zu equal to brute force in %.2f s", agree, n, secs)};
}

Outcome local_search_quality() {
  std::size_t good = 0;
  const std::size_t n = 200;
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    const auto vars = 2 + seed % 19;
    const auto p = random_problem(mix_seed(2, seed), vars, 3 * vars);
    const double best = brute_force_maxsat(p).cost;
    const double got = solve_local(p, seed, 100000).cost;
    if (got <= best * 1.05 + 1e-9) ++good;
  }
  return {good * 100 >= n * 95, fmt("%zu/%zu within 5%% of optimum", good, n)};
}

double true_fraction(const Dataset& data) { return data.true_fraction(); }

CalibrationParams calibrate(const Dataset& data, Oracle& oracle) {
  return grid_search(GridSpec{}, calibration_cases(data, oracle, data.calibration_entities),
                     jobs())
      .best;
}

RunReport run_pipeline(const Dataset& data, const CalibrationParams& params,
                       Oracle& oracle, Pipeline pipeline, std::uint64_t seed) {
  RunConfig config;
  config.pipeline = pipeline;
  config.seed = seed;
  config.jobs = jobs();
  config.oracle = "synthetic:tuned";
  return run(data, params, oracle, config);
}

Outcome consistency_elimination() {
  const auto data = generate(TaxonomySpec::desk());
  SyntheticOracle oracle(SyntheticOracleProfile::tuned(0.97, 0.60, true_fraction(data), 0),
                         data.gold_table(), data.graph);
  const auto params = calibrate(data, oracle);
  const auto r = run_pipeline(data, params, oracle, Pipeline::Solve, 0);
  return {r.aggregate.consistency >= 0.99 && data.entities.size() >= 8,
          fmt("solve consistency %.4f over %zu evaluation entities",
              r.aggregate.consistency, r.aggregate.entities)};
}

Outcome directional_reproduction() {
  const auto start = Clock::now();
  int holds = 0;
  bool profile_ok = true;
  std::ostringstream detail;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto spec = TaxonomySpec::desk();
    spec.seed = seed;
    const auto data = generate(spec);
    const auto profile = SyntheticOracleProfile::tuned(0.97, 0.60, true_fraction(data), seed);
    SyntheticOracle oracle(profile, data.gold_table(), data.graph);

    // Measure the profile on a larger draw of the same generator.
    auto big_spec = spec;
    big_spec.entity_count = 60;
    const auto big = generate(big_spec);
    SyntheticOracle probe(
        SyntheticOracleProfile::tuned(0.97, 0.60, true_fraction(big), seed),
        big.gold_table(), big.graph);
    std::size_t tp = 0, fp = 0, fn = 0;
    for (const auto& f : big.facts) {
      const bool said = is_true(probe.ask(make_query(f.statement)).label);
      tp += said && is_true(f.gold_label);
      fp += said && !is_true(f.gold_label);
      fn += !said && is_true(f.gold_label);
    }
    const double recall = double(tp) / double(tp + fn);
    const double precision = double(tp) / double(tp + fp);
    if (big.facts.size() < 1000 || std::abs(recall - 0.97) > 0.03 ||
        std::abs(precision - 0.60) > 0.03) {
      profile_ok = false;
    }

    const auto params = calibrate(data, oracle);
    double f1[5];
    for (Pipeline p : kAllPipelines) {
      f1[static_cast<int>(p)] = run_pipeline(data, params, oracle, p, seed).aggregate.f1;
    }
    const double raw = f1[0], solve = f1[1], fr = f1[2], fg = f1[3], fgs = f1[4];
    const bool ok = fgs > solve && solve > raw && fg >= fr;
    holds += ok;
    detail << fmt(" s%llu[%.1f/%.1f/%.1f/%.1f/%.1f%s]",
                  static_cast<unsigned long long>(seed), 100 * raw, 100 * solve,
                  100 * fr, 100 * fg, 100 * fgs, ok ? "" : " x");
  }
  const double secs = seconds_since(start);
  return {holds >= 9 && profile_ok && secs < 600.0,
          fmt("ordering held on %d/10 seeds, profile %s, %.1f s; "
              "F1 raw/solve/fr/fg/fgs:",
              holds, profile_ok ? "in tolerance" : "OUT of tolerance", secs) +
              detail.str()};
}

Outcome metric_correctness() {
  std::size_t exact = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = random_scenario(mix_seed(5, seed), 25, 40);
    Rng rng(seed);
    GoldLabels gold;
    for (const auto& [key, b] : s.bank) gold[key] = to_label(rng.bernoulli(0.4));
    const auto c1 = consistency(s.bank, s.constraints);
    const auto c2 = recount_consistency(s.bank, s.constraints);
    const auto f1 = f1_true(s.bank, gold);
    const auto f2 = recount_f1(s.bank, gold);
    if (c1.consistency == c2.consistency &&
        c1.violated_constraints == c2.violated_constraints &&
        c1.applicable_count == c2.applicable_count && f1.f1 == f2.f1 &&
        f1.precision == f2.precision && f1.recall == f2.recall) {
      ++exact;
    }
  }
  return {exact == 100, fmt("%zu/100 banks match the naive recount exactly", exact)};
}

Outcome encoding_fidelity() {
  const auto report = fuzz_pipeline(6000, 100, FuzzOptions{});
  return {report.mismatches == 0,
          fmt("%zu mismatches over %zu (bank, graph) pairs", report.mismatches,
              report.instances)};
}

Outcome gold_self_consistency() {
  std::size_t inconsistent = 0;
  std::size_t entities = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto spec = TaxonomySpec::desk();
    spec.seed = seed;
    const auto data = generate(spec);
    for (const auto& e : data.entities) {
      BeliefBank bank;
      for (const auto& f : data.facts_for(e)) {
        bank.upsert({f.statement, f.gold_label, 1.0, Provenance::RawModel});
      }
      ++entities;
      if (consistency(bank, instantiate_graph(data.graph, e)).consistency != 1.0) {
        ++inconsistent;
      }
    }
  }
  std::size_t equal = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    TaxonomySpec spec;
    spec.seed = 700 + seed;
    spec.concept_count = 12 + seed % 30;
    spec.mutex_subtree_count = 2 + seed % 4;
    spec.entity_count = 3;
    spec.calibration_entities = 1;
    const auto data = generate(spec);
    const auto& entity = data.entities[seed % data.entities.size()];
    const auto grounded = instantiate_graph(data.graph, entity);
    std::vector<LabeledStatement> leaves;
    for (const auto& f : data.facts_for(entity)) {
      if (!f.silver) leaves.push_back({f.statement, f.gold_label});
    }
    bool conflict = false;
    const auto expected = naive_fixpoint(grounded, leaves, conflict);
    const auto got = propagate_labels(grounded, leaves);
    std::map<StatementKey, Label> labels;
    for (const auto& f : got.facts) labels[f.statement.key()] = f.gold_label;
    if (!conflict && got.conflicts.empty() && labels == expected) ++equal;
  }
  return {inconsistent == 0 && equal == 50,
          fmt("%zu/%zu gold sets fully consistent; propagation equals the naive "
              "fixpoint on %zu/50 graphs",
              entities - inconsistent, entities, equal)};
}

Outcome calibration_recovery() {
  const auto cases = planted_cases();
  const auto grid = planted_grid();
  const auto result = grid_search(grid, cases);
  double best = -1.0;
  std::vector<double> argmax;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f1 = evaluate_params(cases, grid.point(i)).f1;
    if (f1 > best + 1e-12) {
      best = f1;
      argmax = {grid.point(i).lambda};
    } else if (std::abs(f1 - best) <= 1e-12) {
      argmax.push_back(grid.point(i).lambda);
    }
  }
  const bool planted = argmax == std::vector<double>{0.5};
  return {planted && result.best.lambda == 0.5,
          fmt("grid search chose lambda %.2f; exhaustive argmax %s", result.best.lambda,
              planted ? "is the planted 0.5" : "differs from the plant")};
}

Outcome determinism() {
  const auto once = [] {
    auto spec = TaxonomySpec::desk();
    spec.seed = 99;
    const auto data = generate(spec);
    SyntheticOracle oracle(
        SyntheticOracleProfile::tuned(0.97, 0.60, true_fraction(data), 99),
        data.gold_table(), data.graph);
    const auto params = calibrate(data, oracle);
    std::string all;
    for (Pipeline p : kAllPipelines) {
      all += report_to_json(run_pipeline(data, params, oracle, p, 99));
    }
    return all;
  };
  const auto a = once();
  const auto b = once();
  return {a == b, fmt("%zu bytes of reports, %s", a.size(),
                      a == b ? "byte-identical" : "DIFFERENT")};
}

Outcome feedback_relevance() {
  PoodleFixture f;
  const GroundedGraph graph(instantiate_graph(f.graph, "poodle"));
  const auto context = build_context(select_relevant(f.bank, graph, f.query, 3));
  const std::string expected =
      "A poodle is a dog. A poodle is a mammal. A poodle is a domesticated canine.";
  return {context == expected, "top-3 context: \"" + context + "\""};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"solver optimality", solver_optimality},
      {"local-search quality", local_search_quality},
      {"consistency elimination", consistency_elimination},
      {"directional ordering", directional_reproduction},
      {"metric correctness", metric_correctness},
      {"encoding fidelity", encoding_fidelity},
      {"gold self-consistency", gold_self_consistency},
      {"calibration recovery", calibration_recovery},
      {"determinism", determinism},
      {"feedback relevance", feedback_relevance},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
