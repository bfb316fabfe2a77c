// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "beliefbank/metrics.hpp"
#include "beliefbank/oracle.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

/// Parameters of the synthetic taxonomy generator.
///
/// `concept_count` counts every object in the graph: IsA concepts form the
/// taxonomy and the other relations supply property objects, split by
/// `relation_mix`. Taxonomy concepts are spread over `mutex_subtree_count`
/// rooted subtrees; concepts in different subtrees are mutually exclusive.
struct TaxonomySpec {
  std::uint64_t seed = 7;
  std::size_t concept_count = 30;
  std::size_t entity_count = 8;
  std::size_t calibration_entities = 2;
  std::map<Relation, double> relation_mix = {
      {Relation::IsA, 0.5},         {Relation::HasA, 0.1},
      {Relation::MadeOf, 0.1},      {Relation::PartOf, 0.1},
      {Relation::HasProperty, 0.1}, {Relation::CapableOf, 0.1},
  };
  std::size_t mutex_subtree_count = 3;
  /// Backward twins score this much below their forward rule.
  double backward_discount = 2.0;

  /// Throws ConfigError for an infeasible or malformed spec.
  void validate() const;

  static TaxonomySpec desk();
  /// ~176 taxonomy concepts; mutex-dominated, on the order of 10^4 rules.
  static TaxonomySpec full_scale();

  friend bool operator==(const TaxonomySpec&, const TaxonomySpec&) = default;
};

struct FactRecord {
  Statement statement;
  Label gold_label = Label::False;
  /// True when the label was derived by propagation.
  bool silver = false;

  friend bool operator==(const FactRecord&, const FactRecord&) = default;
};

struct Dataset {
  ConstraintGraph graph;
  std::vector<std::string> entities;  // sorted
  std::vector<FactRecord> facts;      // sorted by statement key
  std::vector<std::string> calibration_entities;
  std::vector<std::string> evaluation_entities;

  /// Facts of one entity, in key order.
  std::vector<FactRecord> facts_for(std::string_view entity) const;
  GoldLabels gold_for(std::string_view entity) const;
  std::vector<LabeledStatement> gold_table() const;
  double true_fraction() const;
};

/// Builds a taxonomy, its constraint graph, entities and gold facts.
///
/// Forward rules are IsA child -> parent and concept -> property; every
/// forward rule gets a backward twin scored `backward_discount` lower;
/// every cross-subtree concept pair gets two mutex halves. Each entity
/// belongs to one subtree. Facts cover every grounded statement: taxonomy
/// leaves are annotated, labels reachable from them are propagated
/// (silver), and the remaining statements are annotated False.
Dataset generate(const TaxonomySpec& spec);

struct PropagationConflict {
  StatementKey statement;
  /// Derivation chains from an annotated statement to the conflict.
  std::vector<StatementKey> true_chain;
  std::vector<StatementKey> false_chain;
};

struct PropagationResult {
  std::vector<FactRecord> facts;  // sorted by key; conflicts excluded
  std::vector<PropagationConflict> conflicts;
};

/// Fixed point of forward and mutex rules from annotated labels.
///
/// A statement labelled or derived True forces each forward conclusion to
/// the rule's label and each mutex partner to False. Backward rules are not
/// followed. A statement forced both ways is reported and left out of the
/// facts.
PropagationResult propagate_labels(std::span<const GroundedConstraint> grounded,
                                   std::span<const LabeledStatement> leaves);

/// Statements with no incoming forward rule.
std::vector<StatementKey> source_statements(
    std::span<const GroundedConstraint> grounded);

struct CalibrationSplit {
  std::vector<std::string> calibration;
  std::vector<std::string> evaluation;
};

/// Seeded split by entity. Throws ConfigError unless there are at least two
/// entities and 1 <= count < |entities|.
CalibrationSplit split_calibration(std::vector<std::string> entities,
                                   std::size_t calibration_count,
                                   std::uint64_t seed);
CalibrationSplit split_calibration_fraction(std::vector<std::string> entities,
                                            double fraction, std::uint64_t seed);

}  // namespace beliefbank
