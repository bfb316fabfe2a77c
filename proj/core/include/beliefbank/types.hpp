// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beliefbank {

enum class Relation : std::uint8_t {
  IsA,
  HasA,
  MadeOf,
  PartOf,
  HasProperty,
  CapableOf,
};

inline constexpr Relation kAllRelations[] = {
    Relation::IsA,    Relation::HasA,        Relation::MadeOf,
    Relation::PartOf, Relation::HasProperty, Relation::CapableOf,
};

std::string_view to_string(Relation relation);
std::optional<Relation> parse_relation(std::string_view text);

enum class Label : std::uint8_t { False, True };

constexpr Label negate(Label label) {
  return label == Label::True ? Label::False : Label::True;
}
constexpr Label to_label(bool value) {
  return value ? Label::True : Label::False;
}
constexpr bool is_true(Label label) { return label == Label::True; }

/// "T" or "F".
std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view text);

enum class Provenance : std::uint8_t { RawModel, Feedback, Solver };

std::string_view to_string(Provenance provenance);
std::optional<Provenance> parse_provenance(std::string_view text);

enum class ConstraintKind : std::uint8_t { Forward, Backward, MutexHalf };

/// "forward", "backward" or "mutex" (the constraints-file spelling).
std::string_view to_string(ConstraintKind kind);
std::optional<ConstraintKind> parse_constraint_kind(std::string_view text);

/// A sentence with a single free variable "X", e.g. "X is a dog".
struct StatementTemplate {
  std::string id;
  std::string text;
  Relation relation = Relation::IsA;
  std::string object;

  friend bool operator==(const StatementTemplate&,
                         const StatementTemplate&) = default;
};

/// Template id for a (relation, object) pair.
std::string template_id(Relation relation, std::string_view object);

/// Builds the canonical template for a (relation, object) pair.
StatementTemplate make_template(Relation relation, std::string_view object);

/// Throws StructuralError unless `text` holds the token "X" exactly once.
void validate_template(const StatementTemplate& tmpl);

/// "a" or "an" by first-letter vowel heuristic.
std::string_view indefinite_article(std::string_view word);

/// Object as it reads after the relation verb: "a dog", "an animal",
/// "gills", "wood".
std::string object_phrase(Relation relation, std::string_view object);

/// Identity of a grounded statement.
struct StatementKey {
  std::string template_id;
  std::string entity;

  auto operator<=>(const StatementKey&) const = default;
  bool operator==(const StatementKey&) const = default;
};

std::string to_string(const StatementKey& key);

struct Statement {
  std::string template_id;
  std::string entity;
  std::string text;
  Relation relation = Relation::IsA;
  std::string object;

  StatementKey key() const { return {template_id, entity}; }
  friend bool operator==(const Statement&, const Statement&) = default;
};

/// Replaces the single "X" token with the articled entity.
Statement ground_template(const StatementTemplate& tmpl, std::string_view entity);

/// Declarative sentence for a belief about `statement`, without trailing
/// punctuation. Label F uses the relation's negated form
/// ("a swallow is not a fish", "a swallow cannot fly").
std::string render_declarative(const Statement& statement, Label label);

/// Capitalised, period-terminated form used in query contexts.
std::string render_sentence(const Statement& statement, Label label);

struct Belief {
  Statement statement;
  Label label = Label::True;
  double weight = 1.0;
  Provenance provenance = Provenance::RawModel;

  friend bool operator==(const Belief&, const Belief&) = default;
};

/// Weighted soft implication between templates.
struct Constraint {
  StatementTemplate premise;
  StatementTemplate conclusion;
  Label conclusion_label = Label::True;
  double raw_score = 0.0;
  double weight = 1.0;
  ConstraintKind kind = ConstraintKind::Forward;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Throws StructuralError if a single constraint breaks its invariants.
void validate_constraint(const Constraint& constraint);

class ConstraintGraph {
 public:
  ConstraintGraph() = default;

  /// Adds the constraint and both of its templates. Validates the
  /// constraint but not the graph-wide mutex pairing.
  void add(Constraint constraint);
  void add_template(const StatementTemplate& tmpl);

  /// Checks every graph-wide invariant, including that mutex halves come in
  /// direction-reversed pairs.
  void validate() const;

  const std::map<std::string, StatementTemplate>& templates() const {
    return templates_;
  }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::vector<Constraint>& mutable_constraints() { return constraints_; }

  const StatementTemplate* find_template(std::string_view id) const;

  /// Indices of constraints with `template_id` as premise or conclusion.
  std::span<const std::size_t> incident(std::string_view template_id) const;

  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }

 private:
  std::map<std::string, StatementTemplate> templates_;
  std::vector<Constraint> constraints_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> adjacency_;
};

/// A constraint with both templates grounded for one entity.
struct GroundedConstraint {
  Statement premise;
  Statement conclusion;
  Label conclusion_label = Label::True;
  double raw_score = 0.0;
  double weight = 1.0;
  ConstraintKind kind = ConstraintKind::Forward;
  std::size_t source = 0;  // index into ConstraintGraph::constraints()
};

std::vector<GroundedConstraint> instantiate_graph(const ConstraintGraph& graph,
                                                  std::string_view entity);

/// Keeps the grounded constraints whose premise and conclusion both satisfy
/// `contains`.
template <typename Pred>
std::vector<GroundedConstraint> restrict_constraints(
    std::span<const GroundedConstraint> grounded, Pred contains) {
  std::vector<GroundedConstraint> kept;
  for (const auto& c : grounded) {
    if (contains(c.premise.key()) && contains(c.conclusion.key())) {
      kept.push_back(c);
    }
  }
  return kept;
}

/// Grounded constraints indexed by statement, both directions.
class GroundedGraph {
 public:
  GroundedGraph() = default;
  explicit GroundedGraph(std::vector<GroundedConstraint> constraints);

  const std::vector<GroundedConstraint>& constraints() const {
    return constraints_;
  }
  std::span<const std::size_t> incident(const StatementKey& key) const;

 private:
  std::vector<GroundedConstraint> constraints_;
  std::map<StatementKey, std::vector<std::size_t>> adjacency_;
};

}  // namespace beliefbank
