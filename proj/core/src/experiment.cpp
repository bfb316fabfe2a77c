// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "beliefbank/errors.hpp"
#include "beliefbank/feedback.hpp"
#include "beliefbank/maxsat.hpp"
#include "beliefbank/metrics.hpp"
#include "beliefbank/random.hpp"

namespace beliefbank {

namespace {

constexpr std::string_view kPipelineNames[] = {
    "raw", "solve", "feedback-random", "feedback-graph", "feedback-graph-solve",
};

bool uses_feedback(Pipeline p) {
  return p == Pipeline::FeedbackRandom || p == Pipeline::FeedbackGraph ||
         p == Pipeline::FeedbackGraphSolve;
}

bool uses_solver(Pipeline p) {
  return p == Pipeline::Solve || p == Pipeline::FeedbackGraphSolve;
}

std::string describe(const GroundedConstraint& c) {
  return c.premise.text + " => " +
         (is_true(c.conclusion_label) ? "" : "not ") + c.conclusion.text;
}

}  // namespace

std::string_view to_string(Pipeline pipeline) {
  return kPipelineNames[static_cast<std::size_t>(pipeline)];
}

std::optional<Pipeline> parse_pipeline(std::string_view text) {
  for (Pipeline p : kAllPipelines) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

void RunConfig::validate() const {
  if (!(slice > 0.0 && slice <= 1.0)) {
    throw ConfigError("slice must lie in (0,1], got " + std::to_string(slice));
  }
  if (rounds == 0) throw ConfigError("rounds must be >= 1");
  if (jobs == 0) throw ConfigError("jobs must be >= 1");
  if (context_size == 0) throw ConfigError("context size must be >= 1");
  if (local_budget == 0) throw ConfigError("local search budget must be > 0");
}

AggregateReport aggregate(std::span<const EntityReport> entities) {
  AggregateReport agg;
  double consistency_sum = 0.0;
  for (const auto& e : entities) {
    agg.queries += e.queries;
    if (e.error) {
      ++agg.failed;
      continue;
    }
    ++agg.entities;
    agg.precision += e.precision;
    agg.recall += e.recall;
    agg.f1 += e.f1;
    consistency_sum += e.consistency;
    agg.flips += e.flips;
  }
  if (agg.entities > 0) {
    const auto n = static_cast<double>(agg.entities);
    agg.precision /= n;
    agg.recall /= n;
    agg.f1 /= n;
    agg.consistency = consistency_sum / n;
  }
  return agg;
}

std::string dataset_fingerprint(const Dataset& data) {
  std::uint64_t h = fnv1a("beliefbank-dataset");
  const auto feed = [&h](std::string_view text) {
    h = fnv1a(text, h);
    h = fnv1a("\x1f", h);
  };
  for (const auto& c : data.graph.constraints()) {
    feed(c.premise.id);
    feed(c.conclusion.id);
    feed(to_string(c.conclusion_label));
    feed(std::to_string(c.raw_score));
    feed(to_string(c.kind));
  }
  for (const auto& f : data.facts) {
    feed(f.statement.entity);
    feed(f.statement.template_id);
    feed(to_string(f.gold_label));
    feed(f.silver ? "1" : "0");
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(h));
  return buffer;
}

std::vector<FactRecord> slice_facts(std::span<const FactRecord> facts,
                                    double slice, std::uint64_t seed,
                                    std::string_view entity) {
  std::vector<FactRecord> own;
  for (const auto& f : facts) {
    if (f.statement.entity == entity) own.push_back(f);
  }
  std::sort(own.begin(), own.end(), [](const auto& x, const auto& y) {
    return x.statement.key() < y.statement.key();
  });
  if (own.empty()) return own;
  const auto keep = std::clamp<std::size_t>(
      static_cast<std::size_t>(
          std::ceil(slice * static_cast<double>(own.size()) - 1e-9)),
      1, own.size());
  Rng rng(mix_seed(mix_seed(seed, "slice"), entity));
  rng.shuffle(own);
  own.resize(keep);
  std::sort(own.begin(), own.end(), [](const auto& x, const auto& y) {
    return x.statement.key() < y.statement.key();
  });
  return own;
}

BeliefBank query_raw(Oracle& oracle, std::span<const FactRecord> facts,
                     std::string_view entity) {
  BeliefBank bank{std::string(entity)};
  for (const auto& f : facts) {
    const OracleAnswer answer = oracle.ask(make_query(f.statement));
    bank.upsert({f.statement, answer.label, answer.confidence,
                 Provenance::RawModel});
  }
  return bank;
}

namespace {

std::vector<GroundedConstraint> grounded_for(const Dataset& data,
                                             const BeliefBank& bank,
                                             std::string_view entity) {
  const auto all = instantiate_graph(data.graph, entity);
  return restrict_constraints(std::span<const GroundedConstraint>(all),
                              [&bank](const StatementKey& k) {
                                return bank.contains(k);
                              });
}

GoldLabels gold_of(std::span<const FactRecord> facts) {
  GoldLabels gold;
  for (const auto& f : facts) gold.emplace(f.statement.key(), f.gold_label);
  return gold;
}

EntityReport run_entity(const Dataset& data, const CalibrationParams& params,
                        Oracle& oracle, const RunConfig& config,
                        const std::string& entity) {
  EntityReport report;
  report.entity = entity;
  const auto facts = slice_facts(data.facts, config.slice, config.seed, entity);
  report.facts = facts.size();
  try {
    BeliefBank bank = query_raw(oracle, facts, entity);
    report.queries = facts.size();

    auto grounded = grounded_for(data, bank, entity);
    apply_calibration(std::span<GroundedConstraint>(grounded), params);

    if (uses_feedback(config.pipeline)) {
      const GroundedGraph graph(grounded);
      for (std::size_t round = 0; round < config.rounds; ++round) {
        // Contexts are drawn from the bank as it stood before this round.
        const BeliefBank snapshot = bank;
        for (const auto& f : facts) {
          const std::uint64_t seed = mix_seed(
              mix_seed(mix_seed(config.seed, entity), to_string(f.statement.key())),
              round);
          const FeedbackSelection selection =
              config.pipeline == Pipeline::FeedbackRandom
                  ? select_random(snapshot, f.statement, config.context_size, seed)
                  : select_relevant_padded(snapshot, graph, f.statement,
                                           config.context_size, seed);
          const OracleAnswer answer =
              oracle.ask(make_query(f.statement, build_context(selection)));
          ++report.queries;
          bank.upsert({f.statement, answer.label, answer.confidence,
                       Provenance::Feedback});
        }
      }
    }

    if (uses_solver(config.pipeline)) {
      const MaxSatProblem problem = encode(bank, grounded, params);
      Assignment solved;
      if (problem.variables.size() <= config.exact_cap) {
        solved = solve_exact(problem, {config.exact_cap});
        report.solver = "exact";
      } else {
        solved = solve_local(problem, mix_seed(config.seed, entity),
                             config.local_budget);
        report.solver = "local";
      }
      report.flips = apply_assignment(bank, solved).size();
    }

    const AccuracyReport accuracy = f1_true(bank, gold_of(facts));
    report.precision = accuracy.precision;
    report.recall = accuracy.recall;
    report.f1 = accuracy.f1;
    const ConsistencyReport cons = consistency(bank, grounded);
    report.consistency = cons.consistency;
    report.applicable = cons.applicable_count;
    report.violated = cons.violated_count;
    for (std::size_t index : cons.violated_constraints) {
      report.violations.push_back(describe(grounded[index]));
    }
  } catch (const OracleError& e) {
    report.error = e.what();
  }
  return report;
}

}  // namespace

RunReport run(const Dataset& data, const CalibrationParams& params,
              Oracle& oracle, const RunConfig& config,
              std::vector<std::string> entities) {
  config.validate();
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  if (entities.empty()) entities = data.evaluation_entities;
  std::sort(entities.begin(), entities.end());
  entities.erase(std::unique(entities.begin(), entities.end()), entities.end());

  RunReport report;
  report.config = config;
  report.params = params;
  report.dataset = dataset_fingerprint(data);
  report.entities.resize(entities.size());

  std::vector<std::exception_ptr> failures(entities.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < entities.size(); i = next++) {
      try {
        report.entities[i] = run_entity(data, params, oracle, config, entities[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(1, entities.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  report.aggregate = aggregate(report.entities);
  if (config.record_timing) {
    report.wall_clock_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  }
  return report;
}

std::vector<CalibrationCase> calibration_cases(
    const Dataset& data, Oracle& oracle,
    const std::vector<std::string>& entities) {
  std::vector<CalibrationCase> cases;
  for (const auto& entity : entities) {
    const auto facts = data.facts_for(entity);
    CalibrationCase c;
    c.entity = entity;
    c.bank = query_raw(oracle, facts, entity);
    c.constraints = grounded_for(data, c.bank, entity);
    c.gold = gold_of(facts);
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string report_table(std::span<const RunReport> reports) {
  if (reports.empty()) return "";
  std::map<std::pair<Pipeline, double>, const RunReport*> cells;
  std::set<Pipeline> rows;
  std::set<double> slices;
  for (const auto& r : reports) {
    if (r.dataset != reports.front().dataset) {
      throw DataError("reports come from different datasets (" +
                      reports.front().dataset + " vs " + r.dataset + ")");
    }
    const auto key = std::make_pair(r.config.pipeline, r.config.slice);
    if (!cells.emplace(key, &r).second) {
      throw ConfigError("two reports for pipeline " +
                        std::string(to_string(r.config.pipeline)) +
                        " at slice " + std::to_string(r.config.slice));
    }
    rows.insert(r.config.pipeline);
    slices.insert(r.config.slice);
  }

  const auto percent = [](double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", 100.0 * v);
    return std::string(buffer);
  };
  const auto slice_label = [&](double s) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%g%%", 100.0 * s);
    return std::string(buffer);
  };

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"pipeline"};
  for (double s : slices) {
    header.push_back(slice_label(s) + " F1");
    header.push_back(slice_label(s) + " Con");
  }
  grid.push_back(header);
  for (Pipeline p : rows) {
    std::vector<std::string> line{std::string(to_string(p))};
    for (double s : slices) {
      const auto it = cells.find({p, s});
      if (it == cells.end()) {
        line.insert(line.end(), {"-", "-"});
      } else {
        line.push_back(percent(it->second->aggregate.f1));
        line.push_back(percent(it->second->aggregate.consistency));
      }
    }
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      widths[i] = std::max(widths[i], line[i].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t i = 0; i < grid[r].size(); ++i) {
      const auto& cell = grid[r][i];
      const std::string pad(widths[i] - cell.size(), ' ');
      if (i == 0) {
        out << cell << pad;
      } else {
        out << "  " << pad << cell;
      }
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = widths[0];
      for (std::size_t i = 1; i < widths.size(); ++i) total += 2 + widths[i];
      out << std::string(total, '-') << '\n';
    }
  }
  return out.str();
}

}  // namespace beliefbank
