// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "beliefbank/errors.hpp"
#include "nlohmann/json.hpp"

namespace beliefbank {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError(source, 0, "", std::string("invalid JSON: ") + e.what());
  }
}

const Json& expect_array(const Json& doc, const std::string& source) {
  if (!doc.is_array()) throw SchemaError(source, 0, "", "expected a JSON array");
  return doc;
}

// Typed field access on one record; every failure names the field.
class Reader {
 public:
  Reader(const Json& obj, const std::string& source, std::size_t record,
         std::string prefix = "")
      : obj_(obj), source_(source), record_(record), prefix_(std::move(prefix)) {
    if (!obj_.is_object()) fail("", "expected a JSON object");
  }

  [[noreturn]] void fail(std::string_view field, const std::string& msg) const {
    throw SchemaError(source_, record_, prefix_ + std::string(field), msg);
  }

  bool has(std::string_view name) const {
    return obj_.contains(std::string(name));
  }

  const Json& field(std::string_view name) const {
    const auto it = obj_.find(std::string(name));
    if (it == obj_.end()) fail(name, "missing");
    return *it;
  }

  Reader object(std::string_view name) const {
    return Reader(field(name), source_, record_, prefix_ + std::string(name) + ".");
  }

  std::string string(std::string_view name) const {
    const Json& v = field(name);
    if (!v.is_string()) fail(name, "expected a string");
    return v.get<std::string>();
  }

  double number(std::string_view name) const {
    const Json& v = field(name);
    if (!v.is_number()) fail(name, "expected a number");
    return v.get<double>();
  }

  double number_in(std::string_view name, double lo, double hi) const {
    const double v = number(name);
    if (!(v >= lo && v <= hi)) {
      std::ostringstream msg;
      msg << "value " << v << " outside [" << lo << "," << hi << "]";
      fail(name, msg.str());
    }
    return v;
  }

  std::uint64_t unsigned_int(std::string_view name) const {
    const Json& v = field(name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      fail(name, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  bool boolean(std::string_view name) const {
    const Json& v = field(name);
    if (!v.is_boolean()) fail(name, "expected true or false");
    return v.get<bool>();
  }

  Label label(std::string_view name) const {
    const auto parsed = parse_label(string(name));
    if (!parsed) fail(name, "expected \"T\" or \"F\"");
    return *parsed;
  }

  Relation relation(std::string_view name) const {
    const std::string text = string(name);
    const auto parsed = parse_relation(text);
    if (!parsed) fail(name, "unknown relation '" + text + "'");
    return *parsed;
  }

  std::vector<double> numbers(std::string_view name) const {
    const Json& v = field(name);
    if (!v.is_array()) fail(name, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) fail(name, "expected an array of numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }

  std::vector<std::string> strings(std::string_view name) const {
    const Json& v = field(name);
    if (!v.is_array()) fail(name, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& x : v) {
      if (!x.is_string()) fail(name, "expected an array of strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  template <typename T>
  void maybe_number(std::string_view name, T& target) const {
    if (!has(name)) return;
    if constexpr (std::is_floating_point_v<T>) {
      target = number(name);
    } else {
      target = static_cast<T>(unsigned_int(name));
    }
  }

  const std::string& source() const { return source_; }
  std::size_t record() const { return record_; }

 private:
  const Json& obj_;
  const std::string& source_;
  std::size_t record_;
  std::string prefix_;
};

Json template_json(const StatementTemplate& t) {
  Json j;
  j["relation"] = std::string(to_string(t.relation));
  j["object"] = t.object;
  return j;
}

StatementTemplate read_template(const Reader& r) {
  const Relation relation = r.relation("relation");
  const std::string object = r.string("object");
  if (object.empty()) r.fail("object", "must not be empty");
  return make_template(relation, object);
}

Statement read_statement(const Reader& r) {
  const std::string entity = r.string("entity");
  if (entity.empty()) r.fail("entity", "must not be empty");
  return ground_template(read_template(r), entity);
}

Json params_json(const CalibrationParams& p) {
  Json j;
  j["a"] = p.a;
  j["b"] = p.b;
  j["lambda"] = p.lambda;
  j["backward_multiplier"] = p.backward_multiplier;
  j["mutex_multiplier"] = p.mutex_multiplier;
  return j;
}

CalibrationParams read_params(const Reader& r) {
  CalibrationParams p;
  p.a = r.number("a");
  p.b = r.number("b");
  p.lambda = r.number("lambda");
  if (!(p.lambda > 0.0)) r.fail("lambda", "must be positive");
  p.backward_multiplier = r.number_in("backward_multiplier", 0.0, 1.0);
  p.mutex_multiplier = r.number("mutex_multiplier");
  if (!(p.mutex_multiplier > 0.0)) r.fail("mutex_multiplier", "must be positive");
  return p;
}

template <typename T, typename Fn>
std::vector<T> read_records(std::string_view text, const std::string& source,
                            Fn&& read_one) {
  const Json doc = parse_document(text, source);
  std::vector<T> out;
  std::size_t index = 0;
  for (const auto& item : expect_array(doc, source)) {
    out.push_back(read_one(Reader(item, source, index)));
    ++index;
  }
  return out;
}

}  // namespace

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DataError("write failed for " + path.string());
}

// Constraints.

std::string constraints_to_json(const ConstraintGraph& graph) {
  Json doc = Json::array();
  for (const auto& c : graph.constraints()) {
    Json j;
    j["premise"] = template_json(c.premise);
    j["conclusion"] = template_json(c.conclusion);
    j["conclusion_label"] = std::string(to_string(c.conclusion_label));
    j["raw_score"] = c.raw_score;
    j["kind"] = std::string(to_string(c.kind));
    doc.push_back(std::move(j));
  }
  return dump(doc);
}

ConstraintGraph constraints_from_json(std::string_view text,
                                      const std::string& source) {
  ConstraintGraph graph;
  const Json doc = parse_document(text, source);
  std::size_t index = 0;
  for (const auto& item : expect_array(doc, source)) {
    const Reader r(item, source, index);
    Constraint c;
    c.premise = read_template(r.object("premise"));
    c.conclusion = read_template(r.object("conclusion"));
    c.conclusion_label = r.label("conclusion_label");
    c.raw_score = r.number_in("raw_score", 0.0, 4.0);
    const std::string kind = r.string("kind");
    const auto parsed = parse_constraint_kind(kind);
    if (!parsed) r.fail("kind", "unknown kind '" + kind + "'");
    c.kind = *parsed;
    if (c.premise == c.conclusion) {
      r.fail("conclusion", "premise and conclusion are the same template");
    }
    if (c.kind == ConstraintKind::MutexHalf && is_true(c.conclusion_label)) {
      r.fail("conclusion_label", "a mutex rule must conclude \"F\"");
    }
    graph.add(std::move(c));
    ++index;
  }
  try {
    graph.validate();
  } catch (const StructuralError& e) {
    throw SchemaError(source, index, "kind", e.what());
  }
  return graph;
}

void save_constraints(const fs::path& path, const ConstraintGraph& graph) {
  write_file(path, constraints_to_json(graph));
}

ConstraintGraph load_constraints(const fs::path& path) {
  return constraints_from_json(read_file(path), path.string());
}

// Facts.

std::string facts_to_json(const std::vector<FactRecord>& facts) {
  Json doc = Json::array();
  for (const auto& f : facts) {
    Json j;
    j["entity"] = f.statement.entity;
    j["relation"] = std::string(to_string(f.statement.relation));
    j["object"] = f.statement.object;
    j["gold_label"] = std::string(to_string(f.gold_label));
    j["silver"] = f.silver;
    doc.push_back(std::move(j));
  }
  return dump(doc);
}

std::vector<FactRecord> facts_from_json(std::string_view text,
                                        const std::string& source) {
  auto facts = read_records<FactRecord>(text, source, [](const Reader& r) {
    return FactRecord{read_statement(r), r.label("gold_label"),
                      r.boolean("silver")};
  });
  std::set<StatementKey> seen;
  for (std::size_t i = 0; i < facts.size(); ++i) {
    if (!seen.insert(facts[i].statement.key()).second) {
      throw SchemaError(source, i, "object", "duplicate fact for " +
                                                 to_string(facts[i].statement.key()));
    }
  }
  return facts;
}

void save_facts(const fs::path& path, const std::vector<FactRecord>& facts) {
  write_file(path, facts_to_json(facts));
}

std::vector<FactRecord> load_facts(const fs::path& path) {
  return facts_from_json(read_file(path), path.string());
}

// Banks.

std::string bank_to_json(const BeliefBank& bank) {
  Json doc = Json::array();
  for (const auto& [key, b] : bank) {
    Json j;
    j["entity"] = b.statement.entity;
    j["relation"] = std::string(to_string(b.statement.relation));
    j["object"] = b.statement.object;
    j["label"] = std::string(to_string(b.label));
    j["weight"] = b.weight;
    j["provenance"] = std::string(to_string(b.provenance));
    doc.push_back(std::move(j));
  }
  return dump(doc);
}

BeliefBank bank_from_json(std::string_view text, const std::string& source) {
  const auto beliefs = read_records<Belief>(text, source, [](const Reader& r) {
    Belief b;
    b.statement = read_statement(r);
    b.label = r.label("label");
    b.weight = r.number_in("weight", 0.0, 1.0);
    const std::string provenance = r.string("provenance");
    const auto parsed = parse_provenance(provenance);
    if (!parsed) r.fail("provenance", "unknown provenance '" + provenance + "'");
    b.provenance = *parsed;
    return b;
  });
  std::set<std::string> entities;
  for (const auto& b : beliefs) entities.insert(b.statement.entity);
  BeliefBank bank(entities.size() == 1
                      ? std::optional<std::string>(*entities.begin())
                      : std::nullopt);
  for (std::size_t i = 0; i < beliefs.size(); ++i) {
    if (bank.contains(beliefs[i].statement.key())) {
      throw SchemaError(source, i, "object", "two beliefs for one statement");
    }
    bank.upsert(beliefs[i]);
  }
  return bank;
}

void save_bank(const fs::path& path, const BeliefBank& bank) {
  write_file(path, bank_to_json(bank));
}

BeliefBank load_bank(const fs::path& path) {
  return bank_from_json(read_file(path), path.string());
}

// Calibration parameters, grids and traces.

std::string params_to_json(const CalibrationParams& params) {
  return dump(params_json(params));
}

CalibrationParams params_from_json(std::string_view text,
                                   const std::string& source) {
  const Json doc = parse_document(text, source);
  return read_params(Reader(doc, source, 0));
}

void save_params(const fs::path& path, const CalibrationParams& params) {
  write_file(path, params_to_json(params));
}

CalibrationParams load_params(const fs::path& path) {
  return params_from_json(read_file(path), path.string());
}

std::string grid_to_json(const GridSpec& grid) {
  Json j;
  j["a"] = grid.a;
  j["b"] = grid.b;
  j["lambda"] = grid.lambda;
  j["backward_multiplier"] = grid.backward_multiplier;
  j["mutex_multiplier"] = grid.mutex_multiplier;
  return dump(j);
}

GridSpec grid_from_json(std::string_view text, const std::string& source) {
  const Json doc = parse_document(text, source);
  const Reader r(doc, source, 0);
  GridSpec grid;
  const auto list = [&](std::string_view name, std::vector<double>& target) {
    if (!r.has(name)) return;
    target = r.numbers(name);
    if (target.empty()) r.fail(name, "must not be empty");
  };
  list("a", grid.a);
  list("b", grid.b);
  list("lambda", grid.lambda);
  list("backward_multiplier", grid.backward_multiplier);
  list("mutex_multiplier", grid.mutex_multiplier);
  return grid;
}

GridSpec load_grid(const fs::path& path) {
  return grid_from_json(read_file(path), path.string());
}

std::string trace_to_json(const std::vector<TracePoint>& trace) {
  Json doc = Json::array();
  for (const auto& point : trace) {
    Json j;
    j["params"] = params_json(point.params);
    j["f1"] = point.f1;
    j["consistency"] = point.consistency;
    doc.push_back(std::move(j));
  }
  return dump(doc);
}

std::vector<TracePoint> trace_from_json(std::string_view text,
                                        const std::string& source) {
  return read_records<TracePoint>(text, source, [](const Reader& r) {
    return TracePoint{read_params(r.object("params")), r.number_in("f1", 0, 1),
                      r.number_in("consistency", 0, 1)};
  });
}

void save_trace(const fs::path& path, const std::vector<TracePoint>& trace) {
  write_file(path, trace_to_json(trace));
}

// Oracle profile and remote configuration.

std::string profile_to_json(const SyntheticOracleProfile& p) {
  Json j;
  j["false_positive_rate"] = p.false_positive_rate;
  j["false_negative_rate"] = p.false_negative_rate;
  j["correct_alpha"] = p.correct_alpha;
  j["correct_beta"] = p.correct_beta;
  j["wrong_alpha"] = p.wrong_alpha;
  j["wrong_beta"] = p.wrong_beta;
  j["context_correction_prob"] = p.context_correction_prob;
  j["context_miscorrection_prob"] = p.context_miscorrection_prob;
  j["seed"] = p.seed;
  return dump(j);
}

SyntheticOracleProfile profile_from_json(std::string_view text,
                                         const std::string& source) {
  const Json doc = parse_document(text, source);
  const Reader r(doc, source, 0);
  SyntheticOracleProfile p;
  const auto prob = [&](std::string_view name, double& target) {
    if (r.has(name)) target = r.number_in(name, 0.0, 1.0);
  };
  const auto shape = [&](std::string_view name, double& target) {
    if (!r.has(name)) return;
    target = r.number(name);
    if (!(target > 0.0)) r.fail(name, "must be positive");
  };
  prob("false_positive_rate", p.false_positive_rate);
  prob("false_negative_rate", p.false_negative_rate);
  shape("correct_alpha", p.correct_alpha);
  shape("correct_beta", p.correct_beta);
  shape("wrong_alpha", p.wrong_alpha);
  shape("wrong_beta", p.wrong_beta);
  prob("context_correction_prob", p.context_correction_prob);
  prob("context_miscorrection_prob", p.context_miscorrection_prob);
  r.maybe_number("seed", p.seed);
  return p;
}

SyntheticOracleProfile load_profile(const fs::path& path) {
  return profile_from_json(read_file(path), path.string());
}

RemoteConfig remote_config_from_json(std::string_view text,
                                     const std::string& source) {
  const Json doc = parse_document(text, source);
  const Reader r(doc, source, 0);
  RemoteConfig c;
  r.maybe_number("timeout_ms", c.timeout_ms);
  r.maybe_number("max_retries", c.max_retries);
  r.maybe_number("backoff_ms", c.backoff_ms);
  r.maybe_number("max_backoff_ms", c.max_backoff_ms);
  r.maybe_number("max_in_flight", c.max_in_flight);
  if (c.timeout_ms == 0) r.fail("timeout_ms", "must be positive");
  if (c.max_in_flight == 0 || c.max_in_flight > 1024) {
    r.fail("max_in_flight", "must lie in [1,1024]");
  }
  return c;
}

RemoteConfig load_remote_config(const fs::path& path) {
  return remote_config_from_json(read_file(path), path.string());
}

// Taxonomy spec.

std::string spec_to_json(const TaxonomySpec& spec) {
  Json j;
  j["seed"] = spec.seed;
  j["concept_count"] = spec.concept_count;
  j["entity_count"] = spec.entity_count;
  j["calibration_entities"] = spec.calibration_entities;
  Json mix;
  for (const auto& [relation, share] : spec.relation_mix) {
    mix[std::string(to_string(relation))] = share;
  }
  j["relation_mix"] = std::move(mix);
  j["mutex_subtree_count"] = spec.mutex_subtree_count;
  j["backward_discount"] = spec.backward_discount;
  return dump(j);
}

TaxonomySpec spec_from_json(std::string_view text, const std::string& source) {
  const Json doc = parse_document(text, source);
  const Reader r(doc, source, 0);
  TaxonomySpec spec;
  r.maybe_number("seed", spec.seed);
  r.maybe_number("concept_count", spec.concept_count);
  r.maybe_number("entity_count", spec.entity_count);
  r.maybe_number("calibration_entities", spec.calibration_entities);
  r.maybe_number("mutex_subtree_count", spec.mutex_subtree_count);
  r.maybe_number("backward_discount", spec.backward_discount);
  if (r.has("relation_mix")) {
    const Reader mix = r.object("relation_mix");
    spec.relation_mix.clear();
    for (const auto& [name, value] : r.field("relation_mix").items()) {
      const auto relation = parse_relation(name);
      if (!relation) mix.fail(name, "unknown relation");
      spec.relation_mix[*relation] = mix.number_in(name, 0.0, 1.0);
    }
  }
  return spec;
}

TaxonomySpec load_spec(const fs::path& path) {
  return spec_from_json(read_file(path), path.string());
}

// Calibration split.

std::string split_to_json(const CalibrationSplit& split) {
  Json j;
  j["calibration"] = split.calibration;
  j["evaluation"] = split.evaluation;
  return dump(j);
}

CalibrationSplit split_from_json(std::string_view text,
                                 const std::string& source) {
  const Json doc = parse_document(text, source);
  const Reader r(doc, source, 0);
  return {r.strings("calibration"), r.strings("evaluation")};
}

// Run reports.

std::string report_to_json(const RunReport& report) {
  Json j;
  const RunConfig& c = report.config;
  Json config;
  config["pipeline"] = std::string(to_string(c.pipeline));
  config["slice"] = c.slice;
  config["seed"] = c.seed;
  config["rounds"] = c.rounds;
  config["jobs"] = c.jobs;
  config["context_size"] = c.context_size;
  config["exact_cap"] = c.exact_cap;
  config["local_budget"] = c.local_budget;
  config["oracle"] = c.oracle;
  j["config"] = std::move(config);
  j["params"] = params_json(report.params);
  j["dataset"] = report.dataset;

  const AggregateReport& a = report.aggregate;
  Json agg;
  agg["entities"] = a.entities;
  agg["failed"] = a.failed;
  agg["f1"] = a.f1;
  agg["precision"] = a.precision;
  agg["recall"] = a.recall;
  agg["consistency"] = a.consistency;
  agg["flips"] = a.flips;
  agg["queries"] = a.queries;
  j["aggregate"] = std::move(agg);

  Json entities = Json::array();
  for (const auto& e : report.entities) {
    Json ej;
    ej["entity"] = e.entity;
    ej["facts"] = e.facts;
    ej["queries"] = e.queries;
    ej["f1"] = e.f1;
    ej["precision"] = e.precision;
    ej["recall"] = e.recall;
    ej["consistency"] = e.consistency;
    ej["applicable"] = e.applicable;
    ej["violated"] = e.violated;
    ej["flips"] = e.flips;
    ej["solver"] = e.solver;
    ej["violations"] = e.violations;
    ej["error"] = e.error ? Json(*e.error) : Json(nullptr);
    entities.push_back(std::move(ej));
  }
  j["entities"] = std::move(entities);
  if (report.wall_clock_ms) j["wall_clock_ms"] = *report.wall_clock_ms;
  return dump(j);
}

RunReport report_from_json(std::string_view text, const std::string& source) {
  const Json doc = parse_document(text, source);
  const Reader r(doc, source, 0);
  RunReport report;

  const Reader c = r.object("config");
  const std::string pipeline = c.string("pipeline");
  const auto parsed = parse_pipeline(pipeline);
  if (!parsed) c.fail("pipeline", "unknown pipeline '" + pipeline + "'");
  report.config.pipeline = *parsed;
  report.config.slice = c.number_in("slice", 0.0, 1.0);
  report.config.seed = c.unsigned_int("seed");
  report.config.rounds = c.unsigned_int("rounds");
  report.config.jobs = c.unsigned_int("jobs");
  report.config.context_size = c.unsigned_int("context_size");
  report.config.exact_cap = c.unsigned_int("exact_cap");
  report.config.local_budget = c.unsigned_int("local_budget");
  report.config.oracle = c.string("oracle");
  report.params = read_params(r.object("params"));
  report.dataset = r.string("dataset");

  const Reader a = r.object("aggregate");
  report.aggregate.entities = a.unsigned_int("entities");
  report.aggregate.failed = a.unsigned_int("failed");
  report.aggregate.f1 = a.number_in("f1", 0, 1);
  report.aggregate.precision = a.number_in("precision", 0, 1);
  report.aggregate.recall = a.number_in("recall", 0, 1);
  report.aggregate.consistency = a.number_in("consistency", 0, 1);
  report.aggregate.flips = a.unsigned_int("flips");
  report.aggregate.queries = a.unsigned_int("queries");

  const Json& entities = r.field("entities");
  if (!entities.is_array()) r.fail("entities", "expected an array");
  std::size_t index = 0;
  for (const auto& item : entities) {
    const Reader e(item, source, index++, "entities.");
    EntityReport er;
    er.entity = e.string("entity");
    er.facts = e.unsigned_int("facts");
    er.queries = e.unsigned_int("queries");
    er.f1 = e.number_in("f1", 0, 1);
    er.precision = e.number_in("precision", 0, 1);
    er.recall = e.number_in("recall", 0, 1);
    er.consistency = e.number_in("consistency", 0, 1);
    er.applicable = e.unsigned_int("applicable");
    er.violated = e.unsigned_int("violated");
    er.flips = e.unsigned_int("flips");
    er.solver = e.string("solver");
    er.violations = e.strings("violations");
    if (!e.field("error").is_null()) er.error = e.string("error");
    report.entities.push_back(std::move(er));
  }
  if (r.has("wall_clock_ms")) report.wall_clock_ms = r.number("wall_clock_ms");
  return report;
}

void save_report(const fs::path& path, const RunReport& report) {
  write_file(path, report_to_json(report));
}

RunReport load_report(const fs::path& path) {
  return report_from_json(read_file(path), path.string());
}

// Dataset directories.

void save_dataset(const fs::path& dir, const Dataset& data) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  save_constraints(dir / "constraints.json", data.graph);
  save_facts(dir / "facts.json", data.facts);
  write_file(dir / "split.json",
             split_to_json({data.calibration_entities, data.evaluation_entities}));
}

Dataset load_dataset(const fs::path& dir) {
  Dataset data;
  data.graph = load_constraints(dir / "constraints.json");
  const fs::path facts_path = dir / "facts.json";
  data.facts = load_facts(facts_path);
  std::set<std::string> entities;
  for (std::size_t i = 0; i < data.facts.size(); ++i) {
    const Statement& s = data.facts[i].statement;
    if (data.graph.find_template(s.template_id) == nullptr) {
      throw SchemaError(facts_path.string(), i, "object",
                        "template " + s.template_id +
                            " is not in the constraint graph");
    }
    entities.insert(s.entity);
  }
  data.entities.assign(entities.begin(), entities.end());

  const fs::path split_path = dir / "split.json";
  const CalibrationSplit split =
      split_from_json(read_file(split_path), split_path.string());
  std::set<std::string> assigned;
  const auto check = [&](const std::vector<std::string>& list, const char* field) {
    for (const auto& e : list) {
      if (!entities.contains(e)) {
        throw SchemaError(split_path.string(), 0, field,
                          "entity '" + e + "' has no facts");
      }
      if (!assigned.insert(e).second) {
        throw SchemaError(split_path.string(), 0, field,
                          "entity '" + e + "' appears in both slices");
      }
    }
  };
  check(split.calibration, "calibration");
  check(split.evaluation, "evaluation");
  data.calibration_entities = split.calibration;
  data.evaluation_entities = split.evaluation;
  return data;
}

}  // namespace beliefbank
