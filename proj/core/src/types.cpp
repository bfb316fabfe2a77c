// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/types.hpp"

#include <algorithm>
#include <cctype>

#include "beliefbank/errors.hpp"

namespace beliefbank {

namespace {

constexpr std::string_view kVariableToken = "X";

bool ends_with_s(std::string_view word) {
  return !word.empty() && (word.back() == 's' || word.back() == 'S');
}

std::string template_text(Relation relation, std::string_view object,
                          Label label) {
  const std::string obj = object_phrase(relation, object);
  const bool pos = is_true(label);
  switch (relation) {
    case Relation::IsA:
      return pos ? "X is " + obj : "X is not " + obj;
    case Relation::HasA:
      return pos ? "X has " + obj : "X does not have " + obj;
    case Relation::MadeOf:
      return pos ? "X is made of " + obj : "X is not made of " + obj;
    case Relation::PartOf:
      return pos ? "X is part of " + obj : "X is not part of " + obj;
    case Relation::HasProperty:
      return pos ? "X is " + obj : "X is not " + obj;
    case Relation::CapableOf:
      return pos ? "X can " + obj : "X cannot " + obj;
  }
  return {};
}

// Offsets of whitespace-delimited "X" tokens.
std::vector<std::size_t> variable_positions(std::string_view text) {
  std::vector<std::size_t> found;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (text.substr(start, i - start) == kVariableToken) {
      found.push_back(start);
    }
  }
  return found;
}

std::string substitute(std::string_view text, std::string_view entity) {
  const auto positions = variable_positions(text);
  if (positions.size() != 1) {
    throw StructuralError("template '" + std::string(text) + "' has " +
                          std::to_string(positions.size()) +
                          " occurrences of X; expected exactly one");
  }
  std::string out(text.substr(0, positions.front()));
  out.append(indefinite_article(entity)).append(" ").append(entity);
  out.append(text.substr(positions.front() + kVariableToken.size()));
  return out;
}

}  // namespace

std::string object_phrase(Relation relation, std::string_view object) {
  std::string phrase;
  switch (relation) {
    case Relation::IsA:
      phrase.append(indefinite_article(object)).append(" ");
      break;
    case Relation::HasA:
    case Relation::PartOf:
      // plural objects ("gills") go bare
      if (!ends_with_s(object)) {
        phrase.append(indefinite_article(object)).append(" ");
      }
      break;
    case Relation::MadeOf:
    case Relation::HasProperty:
    case Relation::CapableOf:
      break;
  }
  phrase.append(object);
  return phrase;
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::IsA: return "IsA";
    case Relation::HasA: return "HasA";
    case Relation::MadeOf: return "MadeOf";
    case Relation::PartOf: return "PartOf";
    case Relation::HasProperty: return "HasProperty";
    case Relation::CapableOf: return "CapableOf";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view text) {
  for (Relation r : kAllRelations) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

std::string_view to_string(Label label) {
  return is_true(label) ? "T" : "F";
}

std::optional<Label> parse_label(std::string_view text) {
  if (text == "T") return Label::True;
  if (text == "F") return Label::False;
  return std::nullopt;
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::RawModel: return "raw_model";
    case Provenance::Feedback: return "feedback";
    case Provenance::Solver: return "solver";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
  for (Provenance p :
       {Provenance::RawModel, Provenance::Feedback, Provenance::Solver}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Forward: return "forward";
    case ConstraintKind::Backward: return "backward";
    case ConstraintKind::MutexHalf: return "mutex";
  }
  return "?";
}

std::optional<ConstraintKind> parse_constraint_kind(std::string_view text) {
  for (ConstraintKind k : {ConstraintKind::Forward, ConstraintKind::Backward,
                           ConstraintKind::MutexHalf}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::string template_id(Relation relation, std::string_view object) {
  std::string id(to_string(relation));
  id.push_back(':');
  id.append(object);
  return id;
}

StatementTemplate make_template(Relation relation, std::string_view object) {
  if (object.empty()) {
    throw StructuralError("template object must be non-empty");
  }
  StatementTemplate t{template_id(relation, object),
                      template_text(relation, object, Label::True), relation,
                      std::string(object)};
  validate_template(t);
  return t;
}

void validate_template(const StatementTemplate& tmpl) {
  const auto n = variable_positions(tmpl.text).size();
  if (n != 1) {
    throw StructuralError("template '" + tmpl.text + "' has " +
                          std::to_string(n) +
                          " occurrences of X; expected exactly one");
  }
}

std::string_view indefinite_article(std::string_view word) {
  if (word.empty()) return "a";
  switch (std::tolower(static_cast<unsigned char>(word.front()))) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return "an";
    default:
      return "a";
  }
}

std::string to_string(const StatementKey& key) {
  return key.entity + "|" + key.template_id;
}

Statement ground_template(const StatementTemplate& tmpl,
                          std::string_view entity) {
  if (entity.empty()) {
    throw StructuralError("cannot ground template '" + tmpl.id +
                          "' with an empty entity");
  }
  return Statement{tmpl.id, std::string(entity), substitute(tmpl.text, entity),
                   tmpl.relation, tmpl.object};
}

std::string render_declarative(const Statement& statement, Label label) {
  if (is_true(label)) return statement.text;
  return substitute(template_text(statement.relation, statement.object, label),
                    statement.entity);
}

std::string render_sentence(const Statement& statement, Label label) {
  std::string s = render_declarative(statement, label);
  if (!s.empty()) {
    s.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
  }
  s.push_back('.');
  return s;
}

void validate_constraint(const Constraint& c) {
  validate_template(c.premise);
  validate_template(c.conclusion);
  if (c.premise.id == c.conclusion.id) {
    throw StructuralError("constraint premise equals conclusion: " +
                          c.premise.id);
  }
  if (!(c.raw_score >= 0.0 && c.raw_score <= 4.0)) {
    throw StructuralError("constraint raw_score " + std::to_string(c.raw_score) +
                          " outside [0,4]");
  }
  if (!(c.weight >= 0.0)) {
    throw StructuralError("constraint weight must be non-negative");
  }
  if (c.kind == ConstraintKind::MutexHalf && is_true(c.conclusion_label)) {
    throw StructuralError("mutex constraint " + c.premise.id + " -> " +
                          c.conclusion.id + " must conclude F");
  }
}

void ConstraintGraph::add_template(const StatementTemplate& tmpl) {
  validate_template(tmpl);
  auto [it, inserted] = templates_.emplace(tmpl.id, tmpl);
  if (!inserted && !(it->second == tmpl)) {
    throw StructuralError("conflicting definitions for template " + tmpl.id);
  }
}

void ConstraintGraph::add(Constraint constraint) {
  validate_constraint(constraint);
  add_template(constraint.premise);
  add_template(constraint.conclusion);
  const std::size_t index = constraints_.size();
  adjacency_[constraint.premise.id].push_back(index);
  adjacency_[constraint.conclusion.id].push_back(index);
  constraints_.push_back(std::move(constraint));
}

void ConstraintGraph::validate() const {
  std::map<std::pair<std::string, std::string>, int> mutex_halves;
  for (const auto& c : constraints_) {
    validate_constraint(c);
    if (!templates_.contains(c.premise.id) ||
        !templates_.contains(c.conclusion.id)) {
      throw StructuralError("constraint references unknown template");
    }
    if (c.kind == ConstraintKind::MutexHalf) {
      ++mutex_halves[{c.premise.id, c.conclusion.id}];
    }
  }
  for (const auto& [edge, count] : mutex_halves) {
    const auto reverse = mutex_halves.find({edge.second, edge.first});
    if (count != 1 || reverse == mutex_halves.end() || reverse->second != 1) {
      throw StructuralError("mutual exclusivity " + edge.first + " / " +
                            edge.second +
                            " must appear as exactly two direction-reversed "
                            "mutex constraints");
    }
  }
}

const StatementTemplate* ConstraintGraph::find_template(
    std::string_view id) const {
  const auto it = templates_.find(std::string(id));
  return it == templates_.end() ? nullptr : &it->second;
}

std::span<const std::size_t> ConstraintGraph::incident(
    std::string_view template_id) const {
  const auto it = adjacency_.find(template_id);
  if (it == adjacency_.end()) return {};
  return it->second;
}

std::vector<GroundedConstraint> instantiate_graph(const ConstraintGraph& graph,
                                                  std::string_view entity) {
  std::map<std::string, Statement, std::less<>> grounded;
  for (const auto& [id, tmpl] : graph.templates()) {
    grounded.emplace(id, ground_template(tmpl, entity));
  }
  std::vector<GroundedConstraint> out;
  out.reserve(graph.size());
  const auto& constraints = graph.constraints();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    out.push_back(GroundedConstraint{grounded.at(c.premise.id),
                                     grounded.at(c.conclusion.id),
                                     c.conclusion_label, c.raw_score, c.weight,
                                     c.kind, i});
  }
  return out;
}

GroundedGraph::GroundedGraph(std::vector<GroundedConstraint> constraints)
    : constraints_(std::move(constraints)) {
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    adjacency_[constraints_[i].premise.key()].push_back(i);
    adjacency_[constraints_[i].conclusion.key()].push_back(i);
  }
}

std::span<const std::size_t> GroundedGraph::incident(
    const StatementKey& key) const {
  const auto it = adjacency_.find(key);
  if (it == adjacency_.end()) return {};
  return it->second;
}

}  // namespace beliefbank
