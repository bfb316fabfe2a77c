// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/calibration.hpp"
#include "beliefbank/dataset.hpp"
#include "beliefbank/oracle.hpp"

namespace beliefbank {

enum class Pipeline : std::uint8_t {
  Raw,
  Solve,
  FeedbackRandom,
  FeedbackGraph,
  FeedbackGraphSolve,
};

inline constexpr Pipeline kAllPipelines[] = {
    Pipeline::Raw, Pipeline::Solve, Pipeline::FeedbackRandom,
    Pipeline::FeedbackGraph, Pipeline::FeedbackGraphSolve,
};

/// "raw", "solve", "feedback-random", "feedback-graph",
/// "feedback-graph-solve".
std::string_view to_string(Pipeline pipeline);
std::optional<Pipeline> parse_pipeline(std::string_view text);

struct RunConfig {
  Pipeline pipeline = Pipeline::Raw;
  double slice = 1.0;
  std::uint64_t seed = 0;
  std::size_t rounds = 1;
  std::size_t jobs = 1;
  /// Beliefs per feedback context.
  std::size_t context_size = 3;
  std::size_t exact_cap = 40;
  std::uint64_t local_budget = 100000;
  /// Free-form description echoed in the report, e.g. "synthetic:tuned".
  std::string oracle;
  /// Fill RunReport::wall_clock_ms. Off by default so equal configs give
  /// byte-identical reports.
  bool record_timing = false;

  /// Throws ConfigError unless slice is in (0,1] and counts are positive.
  void validate() const;
};

struct EntityReport {
  std::string entity;
  std::size_t facts = 0;
  std::size_t queries = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double consistency = 1.0;
  std::size_t applicable = 0;
  std::size_t violated = 0;
  std::size_t flips = 0;
  /// "exact", "local" or "" when the pipeline does not solve.
  std::string solver;
  /// "premise => [not] conclusion" for every violated constraint.
  std::vector<std::string> violations;
  /// Set when the entity failed; such entities are left out of the
  /// aggregate.
  std::optional<std::string> error;

  friend bool operator==(const EntityReport&, const EntityReport&) = default;
};

struct AggregateReport {
  std::size_t entities = 0;
  std::size_t failed = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double consistency = 1.0;
  std::size_t flips = 0;
  std::size_t queries = 0;

  friend bool operator==(const AggregateReport&, const AggregateReport&) = default;
};

struct RunReport {
  RunConfig config;
  CalibrationParams params;
  std::string dataset;  // fingerprint
  std::vector<EntityReport> entities;  // sorted by entity
  AggregateReport aggregate;
  std::optional<double> wall_clock_ms;  // only with record_timing
};

/// Macro-average over the entities without an error.
AggregateReport aggregate(std::span<const EntityReport> entities);

/// Stable hex digest of a dataset's constraints and facts.
std::string dataset_fingerprint(const Dataset& data);

/// Runs one pipeline over `entities` (the dataset's evaluation entities
/// when empty). Each entity gets its own bank; entities run on up to
/// `config.jobs` threads and an oracle failure affects only its entity.
RunReport run(const Dataset& data, const CalibrationParams& params,
              Oracle& oracle, const RunConfig& config,
              std::vector<std::string> entities = {});

/// The facts of one entity kept by a slice, in key order.
std::vector<FactRecord> slice_facts(std::span<const FactRecord> facts,
                                    double slice, std::uint64_t seed,
                                    std::string_view entity);

/// Asks the oracle about every fact without context.
BeliefBank query_raw(Oracle& oracle, std::span<const FactRecord> facts,
                     std::string_view entity);

/// Calibration cases for `entities`: raw oracle banks, grounded constraints
/// restricted to each bank, and gold labels.
std::vector<CalibrationCase> calibration_cases(
    const Dataset& data, Oracle& oracle,
    const std::vector<std::string>& entities);

/// Pipelines as rows, (F1, Con) column pairs per slice, percentages with
/// two decimals. Throws DataError if the reports come from different
/// datasets and ConfigError if two share a pipeline and slice.
std::string report_table(std::span<const RunReport> reports);

}  // namespace beliefbank
