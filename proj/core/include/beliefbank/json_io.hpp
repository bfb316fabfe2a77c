// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON persistence for every artifact the tools exchange. Writers emit a
// fixed key order, two-space indentation and a trailing newline, so equal
// values always produce equal bytes. Readers throw SchemaError naming the
// file, the record index and the offending field.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/calibration.hpp"
#include "beliefbank/dataset.hpp"
#include "beliefbank/experiment.hpp"
#include "beliefbank/oracle.hpp"
#include "beliefbank/remote_oracle.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

namespace fs = std::filesystem;

// Each type has a text pair (`source` names the input in errors) and a
// file pair.

std::string constraints_to_json(const ConstraintGraph& graph);
ConstraintGraph constraints_from_json(std::string_view text,
                                      const std::string& source);
void save_constraints(const fs::path& path, const ConstraintGraph& graph);
ConstraintGraph load_constraints(const fs::path& path);

std::string facts_to_json(const std::vector<FactRecord>& facts);
std::vector<FactRecord> facts_from_json(std::string_view text,
                                        const std::string& source);
void save_facts(const fs::path& path, const std::vector<FactRecord>& facts);
std::vector<FactRecord> load_facts(const fs::path& path);

std::string bank_to_json(const BeliefBank& bank);
BeliefBank bank_from_json(std::string_view text, const std::string& source);
void save_bank(const fs::path& path, const BeliefBank& bank);
BeliefBank load_bank(const fs::path& path);

std::string params_to_json(const CalibrationParams& params);
CalibrationParams params_from_json(std::string_view text,
                                   const std::string& source);
void save_params(const fs::path& path, const CalibrationParams& params);
CalibrationParams load_params(const fs::path& path);

/// Missing lists keep their defaults.
std::string grid_to_json(const GridSpec& grid);
GridSpec grid_from_json(std::string_view text, const std::string& source);
GridSpec load_grid(const fs::path& path);

std::string trace_to_json(const std::vector<TracePoint>& trace);
std::vector<TracePoint> trace_from_json(std::string_view text,
                                        const std::string& source);
void save_trace(const fs::path& path, const std::vector<TracePoint>& trace);

/// Missing fields keep their defaults.
std::string profile_to_json(const SyntheticOracleProfile& profile);
SyntheticOracleProfile profile_from_json(std::string_view text,
                                         const std::string& source);
SyntheticOracleProfile load_profile(const fs::path& path);

/// Missing fields keep their defaults.
std::string spec_to_json(const TaxonomySpec& spec);
TaxonomySpec spec_from_json(std::string_view text, const std::string& source);
TaxonomySpec load_spec(const fs::path& path);

/// Missing fields keep their defaults.
RemoteConfig remote_config_from_json(std::string_view text,
                                     const std::string& source);
RemoteConfig load_remote_config(const fs::path& path);

std::string split_to_json(const CalibrationSplit& split);
CalibrationSplit split_from_json(std::string_view text,
                                 const std::string& source);

std::string report_to_json(const RunReport& report);
RunReport report_from_json(std::string_view text, const std::string& source);
void save_report(const fs::path& path, const RunReport& report);
RunReport load_report(const fs::path& path);

/// constraints.json, facts.json and split.json under `dir`.
void save_dataset(const fs::path& dir, const Dataset& data);
/// Also checks that every fact's template is in the graph and that split
/// entities are known and disjoint.
Dataset load_dataset(const fs::path& dir);

/// Whole file as a string; throws DataError if unreadable.
std::string read_file(const fs::path& path);
/// Truncates and writes; throws DataError on failure.
void write_file(const fs::path& path, std::string_view text);

}  // namespace beliefbank
