// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/oracle.hpp"

#include <algorithm>

#include "beliefbank/metrics.hpp"
#include "beliefbank/random.hpp"

namespace beliefbank {

namespace {

std::string subject(const Statement& s) {
  return std::string(indefinite_article(s.entity)) + " " + s.entity;
}

bool in_unit_interval(double p) { return p >= 0.0 && p <= 1.0; }

std::uint64_t statement_seed(std::uint64_t seed, const StatementKey& key) {
  return mix_seed(mix_seed(seed, key.template_id), key.entity);
}

}  // namespace

std::string render_question(const Statement& s) {
  const std::string obj = object_phrase(s.relation, s.object);
  switch (s.relation) {
    case Relation::IsA: return "Is " + subject(s) + " " + obj + "?";
    case Relation::HasA: return "Does " + subject(s) + " have " + obj + "?";
    case Relation::MadeOf: return "Is " + subject(s) + " made of " + obj + "?";
    case Relation::PartOf: return "Is " + subject(s) + " part of " + obj + "?";
    case Relation::HasProperty: return "Is " + subject(s) + " " + obj + "?";
    case Relation::CapableOf: return "Can " + subject(s) + " " + obj + "?";
  }
  return {};
}

Query make_query(const Statement& statement,
                 std::optional<std::string> context) {
  if (context && context->empty()) context.reset();
  return Query{statement, render_question(statement), std::move(context)};
}

std::string format_prompt(const Query& query) {
  if (!query.context) return query.question_text;
  return "CONTEXT " + *query.context + " QUERY " + query.question_text;
}

std::string_view to_string(OracleErrorKind kind) {
  switch (kind) {
    case OracleErrorKind::Timeout: return "timeout";
    case OracleErrorKind::Transport: return "transport";
    case OracleErrorKind::Status: return "status";
    case OracleErrorKind::Malformed: return "malformed-response";
    case OracleErrorKind::Refusal: return "refusal";
    case OracleErrorKind::UnknownStatement: return "unknown-statement";
  }
  return "?";
}

void SyntheticOracleProfile::validate() const {
  for (double p : {false_positive_rate, false_negative_rate,
                   context_correction_prob, context_miscorrection_prob}) {
    if (!in_unit_interval(p)) {
      throw ConfigError("synthetic oracle probabilities must lie in [0,1]");
    }
  }
  for (double shape : {correct_alpha, correct_beta, wrong_alpha, wrong_beta}) {
    if (!(shape > 0.0)) {
      throw ConfigError("synthetic oracle Beta shapes must be positive");
    }
  }
}

SyntheticOracleProfile SyntheticOracleProfile::tuned(double recall,
                                                     double precision,
                                                     double true_fraction,
                                                     std::uint64_t seed) {
  if (!(recall > 0.0 && recall <= 1.0) ||
      !(precision > 0.0 && precision <= 1.0) ||
      !(true_fraction > 0.0 && true_fraction < 1.0)) {
    throw ConfigError("tuned profile needs recall, precision in (0,1] and a "
                      "true fraction in (0,1)");
  }
  SyntheticOracleProfile p;
  p.seed = seed;
  p.false_negative_rate = 1.0 - recall;
  // precision = r t / (r t + fpr (1 - t))
  p.false_positive_rate =
      std::clamp(recall * true_fraction * (1.0 - precision) /
                     (precision * (1.0 - true_fraction)),
                 0.0, 1.0);
  return p;
}

SyntheticOracle::SyntheticOracle(SyntheticOracleProfile profile,
                                 std::span<const LabeledStatement> gold,
                                 ConstraintGraph graph)
    : profile_(profile), graph_(std::move(graph)) {
  profile_.validate();
  for (const auto& [statement, label] : gold) {
    const StatementKey key = statement.key();
    gold_[key] = label;
    for (Label l : {Label::True, Label::False}) {
      sentences_.emplace(render_sentence(statement, l), std::make_pair(key, l));
    }
  }
}

Label SyntheticOracle::gold(const StatementKey& key) const {
  const auto it = gold_.find(key);
  if (it == gold_.end()) {
    throw OracleError(OracleErrorKind::UnknownStatement,
                      "no gold label for " + to_string(key));
  }
  return it->second;
}

OracleAnswer SyntheticOracle::ask(const Query& query) {
  return answer(query.statement, gold(query.statement.key()),
                query.context.value_or(std::string{}));
}

std::vector<std::pair<StatementKey, Label>> SyntheticOracle::parse_context(
    std::string_view context) const {
  std::vector<std::pair<StatementKey, Label>> found;
  std::size_t start = 0;
  while (start < context.size()) {
    std::size_t end = context.find(". ", start);
    end = end == std::string_view::npos ? context.size() : end + 1;
    const std::string_view sentence = context.substr(start, end - start);
    if (const auto it = sentences_.find(sentence); it != sentences_.end()) {
      found.push_back(it->second);
    }
    start = end;
    while (start < context.size() && context[start] == ' ') ++start;
  }
  return found;
}

bool SyntheticOracle::clashes(const StatementKey& query, Label answer,
                              const StatementKey& other,
                              Label other_label) const {
  if (query.entity != other.entity) return false;
  for (const std::size_t index : graph_.incident(query.template_id)) {
    const Constraint& c = graph_.constraints()[index];
    const GroundedConstraint g{{}, {}, c.conclusion_label, c.raw_score,
                               c.weight, c.kind, index};
    if (c.premise.id == query.template_id &&
        c.conclusion.id == other.template_id &&
        violates(g, answer, other_label)) {
      return true;
    }
    if (c.conclusion.id == query.template_id &&
        c.premise.id == other.template_id &&
        violates(g, other_label, answer)) {
      return true;
    }
  }
  return false;
}

OracleAnswer SyntheticOracle::answer(const Statement& statement, Label gold,
                                     std::string_view context) const {
  const StatementKey key = statement.key();
  const std::uint64_t base = statement_seed(profile_.seed, key);

  Rng draw(base);
  const double error_rate = is_true(gold) ? profile_.false_negative_rate
                                          : profile_.false_positive_rate;
  const Label raw = draw.bernoulli(error_rate) ? negate(gold) : gold;
  Label label = raw;

  if (!context.empty()) {
    const auto beliefs = parse_context(context);
    const bool contradicted = std::any_of(
        beliefs.begin(), beliefs.end(), [&](const auto& belief) {
          return clashes(key, raw, belief.first, belief.second);
        });
    if (contradicted) {
      Rng nudge(mix_seed(base, context));
      if (raw != gold) {
        if (nudge.bernoulli(profile_.context_correction_prob)) label = gold;
      } else if (nudge.bernoulli(profile_.context_miscorrection_prob)) {
        label = negate(gold);
      }
    }
  }

  Rng confidence(mix_seed(mix_seed(base, context), "confidence"));
  const bool correct = label == gold;
  const double c =
      correct ? confidence.beta(profile_.correct_alpha, profile_.correct_beta)
              : confidence.beta(profile_.wrong_alpha, profile_.wrong_beta);
  return {label, std::clamp(c, 0.0, 1.0)};
}

}  // namespace beliefbank
