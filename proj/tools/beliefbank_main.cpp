// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

// beliefbank: batch experiment runner.
//
// Exit codes: 0 success, 1 configuration error, 2 data error, 3 oracle error.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "beliefbank/beliefbank.hpp"

namespace bb = beliefbank;

namespace {

enum Exit : int { kOk = 0, kConfig = 1, kData = 2, kOracle = 3 };

std::unique_ptr<bb::Oracle> make_oracle(const std::string& spec,
                                        const bb::Dataset& data,
                                        std::uint64_t seed,
                                        const std::string& remote_config) {
  if (spec.rfind("remote:", 0) == 0) {
    bb::RemoteConfig config;
    if (!remote_config.empty()) config = bb::load_remote_config(remote_config);
    return std::make_unique<bb::RemoteOracle>(spec.substr(7), config);
  }
  bb::SyntheticOracleProfile profile;
  if (spec == "synthetic") {
    profile = bb::SyntheticOracleProfile::tuned(0.97, 0.60, data.true_fraction(),
                                                seed);
  } else if (spec.rfind("synthetic:", 0) == 0) {
    profile = bb::load_profile(spec.substr(10));
  } else {
    throw bb::ConfigError("oracle must be 'synthetic', 'synthetic:<profile>' "
                          "or 'remote:<url>', got '" + spec + "'");
  }
  const auto gold = data.gold_table();
  return std::make_unique<bb::SyntheticOracle>(profile, gold, data.graph);
}

// Grounded constraints for every entity in the bank, restricted to
// statements the bank holds.
std::vector<bb::GroundedConstraint> ground_for_bank(
    const bb::ConstraintGraph& graph, const bb::BeliefBank& bank) {
  std::set<std::string> entities;
  for (const auto& [key, belief] : bank) entities.insert(key.entity);
  std::vector<bb::GroundedConstraint> out;
  for (const auto& entity : entities) {
    const auto all = bb::instantiate_graph(graph, entity);
    auto kept = bb::restrict_constraints(
        std::span<const bb::GroundedConstraint>(all),
        [&bank](const bb::StatementKey& k) { return bank.contains(k); });
    out.insert(out.end(), kept.begin(), kept.end());
  }
  return out;
}

struct GenerateArgs {
  std::string spec;
  std::string preset = "desk";
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  bb::TaxonomySpec spec;
  if (!args.spec.empty()) {
    spec = bb::load_spec(args.spec);
  } else if (args.preset == "full") {
    spec = bb::TaxonomySpec::full_scale();
  } else if (args.preset != "desk") {
    throw bb::ConfigError("unknown preset '" + args.preset + "'");
  }
  if (args.seed) spec.seed = *args.seed;
  const bb::Dataset data = bb::generate(spec);
  bb::save_dataset(args.out, data);
  std::cout << "wrote " << data.graph.size() << " constraints, "
            << data.facts.size() << " facts for " << data.entities.size()
            << " entities to " << args.out << "\n";
  return kOk;
}

struct CalibrateArgs {
  std::string data;
  std::string grid;
  std::string out;
  std::string trace;
  std::string oracle = "synthetic";
  std::string remote_config;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

int cmd_calibrate(const CalibrateArgs& args) {
  const bb::Dataset data = bb::load_dataset(args.data);
  const bb::GridSpec grid =
      args.grid.empty() ? bb::GridSpec{} : bb::load_grid(args.grid);
  auto oracle = make_oracle(args.oracle, data, args.seed, args.remote_config);
  auto cases = bb::calibration_cases(data, *oracle, data.calibration_entities);
  const bb::GridResult result = bb::grid_search(grid, std::move(cases), args.jobs);
  bb::save_params(args.out, result.best);
  if (!args.trace.empty()) bb::save_trace(args.trace, result.trace);
  std::cout << "best F1 " << result.best_f1 << " over " << result.trace.size()
            << " grid points; params written to " << args.out << "\n";
  return kOk;
}

struct RunArgs {
  std::string data;
  std::string params;
  std::string pipeline = "raw";
  double slice = 1.0;
  std::uint64_t seed = 0;
  std::string oracle = "synthetic";
  std::string remote_config;
  std::string report;
  std::size_t jobs = 1;
  std::size_t rounds = 1;
  std::size_t context_size = 3;
  std::size_t exact_cap = 40;
  std::uint64_t budget = 100000;
  bool table = false;
  bool timing = false;
};

int cmd_run(const RunArgs& args) {
  const auto pipeline = bb::parse_pipeline(args.pipeline);
  if (!pipeline) throw bb::ConfigError("unknown pipeline '" + args.pipeline + "'");
  bb::RunConfig config;
  config.pipeline = *pipeline;
  config.slice = args.slice;
  config.seed = args.seed;
  config.rounds = args.rounds;
  config.jobs = args.jobs;
  config.context_size = args.context_size;
  config.exact_cap = args.exact_cap;
  config.local_budget = args.budget;
  config.oracle = args.oracle;
  config.validate();

  const bb::Dataset data = bb::load_dataset(args.data);
  const bb::CalibrationParams params = bb::load_params(args.params);
  auto oracle = make_oracle(args.oracle, data, args.seed, args.remote_config);
  config.record_timing = args.timing;
  const bb::RunReport report = bb::run(data, params, *oracle, config);
  if (!args.report.empty()) bb::save_report(args.report, report);
  if (args.table) {
    std::cout << bb::report_table(std::span<const bb::RunReport>(&report, 1));
  }
  for (const auto& e : report.entities) {
    if (e.error) std::cerr << "entity " << e.entity << ": " << *e.error << "\n";
  }
  return report.aggregate.failed > 0 ? kOracle : kOk;
}

struct SolveArgs {
  std::string bank;
  std::string constraints;
  std::string params;
  std::string out;
  std::string wcnf;
  std::size_t exact_cap = 40;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
};

int cmd_solve(const SolveArgs& args) {
  bb::BeliefBank bank = bb::load_bank(args.bank);
  const bb::ConstraintGraph graph = bb::load_constraints(args.constraints);
  const bb::CalibrationParams params = bb::load_params(args.params);
  auto grounded = ground_for_bank(graph, bank);
  bb::apply_calibration(std::span<bb::GroundedConstraint>(grounded), params);
  const bb::MaxSatProblem problem = bb::encode(bank, grounded, params);
  if (!args.wcnf.empty()) {
    std::ofstream out(args.wcnf);
    if (!out) throw bb::DataError("cannot write " + args.wcnf);
    bb::write_wcnf(out, problem);
  }
  const bool exact = problem.variables.size() <= args.exact_cap;
  const bb::Assignment solved =
      exact ? bb::solve_exact(problem, {args.exact_cap})
            : bb::solve_local(problem, args.seed, args.budget);
  const auto before = bb::consistency(bank, grounded).consistency;
  const auto flips = bb::apply_assignment(bank, solved);
  const auto after = bb::consistency(bank, grounded).consistency;
  if (!args.out.empty()) bb::save_bank(args.out, bank);

  std::cout << "solver: " << (exact ? "exact" : "local") << "\n"
            << "cost: " << solved.cost << "\n"
            << "consistency: " << before << " -> " << after << "\n"
            << "flips: " << flips.size() << "\n";
  for (const auto& f : flips) {
    std::cout << "  " << bb::to_string(f.key) << " " << bb::to_string(f.from)
              << " -> " << bb::to_string(f.to) << "\n";
  }
  return kOk;
}

struct ConsistencyArgs {
  std::string bank;
  std::string constraints;
};

int cmd_consistency(const ConsistencyArgs& args) {
  const bb::BeliefBank bank = bb::load_bank(args.bank);
  const bb::ConstraintGraph graph = bb::load_constraints(args.constraints);
  const auto grounded = ground_for_bank(graph, bank);
  const auto report = bb::consistency(bank, grounded);
  std::cout << "applicable: " << report.applicable_count << "\n"
            << "violated: " << report.violated_count << "\n"
            << "tau: " << report.tau << "\n"
            << "consistency: " << report.consistency << "\n";
  for (std::size_t index : report.violated_constraints) {
    const auto& c = grounded[index];
    std::cout << "  " << c.premise.text << " => "
              << (bb::is_true(c.conclusion_label) ? "" : "not ")
              << c.conclusion.text << "\n";
  }
  return kOk;
}

int cmd_table(const std::vector<std::string>& paths) {
  std::vector<bb::RunReport> reports;
  for (const auto& p : paths) reports.push_back(bb::load_report(p));
  std::cout << bb::report_table(reports);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BeliefBank consistency engine over a true/false oracle"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a synthetic dataset");
  generate->add_option("--spec", gen.spec, "Taxonomy spec JSON");
  generate->add_option("--preset", gen.preset, "desk or full (without --spec)");
  generate->add_option("--seed", gen.seed, "Override the spec seed");
  generate->add_option("--out", gen.out, "Output directory")->required();

  CalibrateArgs cal;
  auto* calibrate = app.add_subcommand("calibrate", "Grid-search calibration parameters");
  calibrate->add_option("--data", cal.data, "Dataset directory")->required();
  calibrate->add_option("--grid", cal.grid, "Grid JSON (defaults if omitted)");
  calibrate->add_option("--out", cal.out, "Output params JSON")->required();
  calibrate->add_option("--trace", cal.trace, "Write the objective trace here");
  calibrate->add_option("--oracle", cal.oracle,
                        "synthetic | synthetic:<profile> | remote:<url>");
  calibrate->add_option("--remote-config", cal.remote_config, "Remote client JSON");
  calibrate->add_option("--seed", cal.seed, "Oracle seed");
  calibrate->add_option("--jobs", cal.jobs, "Worker threads")->check(CLI::PositiveNumber);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one pipeline and report");
  run_cmd->add_option("--data", run.data, "Dataset directory")->required();
  run_cmd->add_option("--params", run.params, "Calibration params JSON")->required();
  run_cmd->add_option("--pipeline", run.pipeline,
                      "raw | solve | feedback-random | feedback-graph | "
                      "feedback-graph-solve");
  run_cmd->add_option("--slice", run.slice, "Fraction of facts per entity");
  run_cmd->add_option("--seed", run.seed, "Run seed");
  run_cmd->add_option("--oracle", run.oracle,
                      "synthetic | synthetic:<profile> | remote:<url>");
  run_cmd->add_option("--remote-config", run.remote_config, "Remote client JSON");
  run_cmd->add_option("--report", run.report, "Write the JSON report here");
  run_cmd->add_option("--jobs", run.jobs, "Entities processed in parallel");
  run_cmd->add_option("--rounds", run.rounds, "Feedback rounds");
  run_cmd->add_option("--context-size", run.context_size, "Beliefs per context");
  run_cmd->add_option("--exact-cap", run.exact_cap, "Largest problem for the exact solver");
  run_cmd->add_option("--budget", run.budget, "Local search flip budget");
  run_cmd->add_flag("--table", run.table, "Print a text table");
  run_cmd->add_flag("--timing", run.timing, "Include wall-clock time in the report");

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Solve a bank against constraints");
  solve->add_option("--bank", sol.bank, "Bank JSON")->required();
  solve->add_option("--constraints", sol.constraints, "Constraints JSON")->required();
  solve->add_option("--params", sol.params, "Calibration params JSON")->required();
  solve->add_option("--out", sol.out, "Write the solved bank here");
  solve->add_option("--wcnf", sol.wcnf, "Dump the weighted CNF here");
  solve->add_option("--exact-cap", sol.exact_cap, "Largest problem for the exact solver");
  solve->add_option("--seed", sol.seed, "Local search seed");
  solve->add_option("--budget", sol.budget, "Local search flip budget");

  ConsistencyArgs con;
  auto* cons = app.add_subcommand("consistency", "Score a bank's consistency");
  cons->add_option("--bank", con.bank, "Bank JSON")->required();
  cons->add_option("--constraints", con.constraints, "Constraints JSON")->required();

  std::vector<std::string> table_reports;
  auto* table = app.add_subcommand("table", "Render reports as a table");
  table->add_option("reports", table_reports, "Report JSON files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*calibrate) return cmd_calibrate(cal);
    if (*run_cmd) return cmd_run(run);
    if (*solve) return cmd_solve(sol);
    if (*cons) return cmd_consistency(con);
    if (*table) return cmd_table(table_reports);
  } catch (const bb::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const bb::OracleError& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return kOracle;
  } catch (const bb::Error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  }
  return kOk;
}
