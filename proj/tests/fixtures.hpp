// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "beliefbank/beliefbank.hpp"

namespace bbtest {

using namespace beliefbank;

inline StatementTemplate isa(const std::string& object) {
  return make_template(Relation::IsA, object);
}

inline Constraint rule(const StatementTemplate& premise,
                       const StatementTemplate& conclusion, Label label,
                       double weight,
                       ConstraintKind kind = ConstraintKind::Forward,
                       double raw = 4.0) {
  return Constraint{premise, conclusion, label, raw, weight, kind};
}

inline void add_mutex(ConstraintGraph& graph, const StatementTemplate& x,
                      const StatementTemplate& y, double weight) {
  graph.add(rule(x, y, Label::False, weight, ConstraintKind::MutexHalf));
  graph.add(rule(y, x, Label::False, weight, ConstraintKind::MutexHalf));
}

inline Belief belief(const StatementTemplate& tmpl, const std::string& entity,
                     Label label, double weight) {
  return Belief{ground_template(tmpl, entity), label, weight,
                Provenance::RawModel};
}

/// Poodle fixture: three strong routes into "animal", one weak backward
/// rule and some unrelated beliefs.
struct PoodleFixture {
  ConstraintGraph graph;
  BeliefBank bank{std::string("poodle")};
  Statement query;

  PoodleFixture() {
    const auto dog = isa("dog");
    const auto mammal = isa("mammal");
    const auto canine = isa("domesticated canine");
    const auto animal = isa("animal");
    const auto fish = isa("fish");
    const auto plant = isa("plant");
    const auto tail = make_template(Relation::HasA, "tail");
    const auto fly = make_template(Relation::CapableOf, "fly");
    graph.add(rule(dog, animal, Label::True, 0.95));
    graph.add(rule(mammal, animal, Label::True, 0.95));
    graph.add(rule(canine, animal, Label::True, 0.9));
    graph.add(rule(fish, animal, Label::True, 0.95));
    graph.add(rule(animal, dog, Label::True, 0.2, ConstraintKind::Backward, 2));
    graph.add(rule(dog, tail, Label::True, 0.8));
    add_mutex(graph, animal, plant, 0.9);
    graph.validate();

    bank.upsert(belief(dog, "poodle", Label::True, 0.9));
    bank.upsert(belief(mammal, "poodle", Label::True, 0.85));
    bank.upsert(belief(canine, "poodle", Label::True, 0.8));
    bank.upsert(belief(fish, "poodle", Label::False, 0.9));
    bank.upsert(belief(plant, "poodle", Label::True, 0.3));
    bank.upsert(belief(tail, "poodle", Label::True, 0.9));
    bank.upsert(belief(fly, "poodle", Label::False, 0.6));
    query = ground_template(animal, "poodle");
  }
};

// Naive fixpoint: sweep every forward and mutex rule until nothing changes.
inline std::map<StatementKey, Label> naive_fixpoint(
    const std::vector<GroundedConstraint>& grounded,
    const std::vector<LabeledStatement>& leaves, bool& conflict) {
  std::map<StatementKey, Label> labels;
  for (const auto& l : leaves) labels[l.statement.key()] = l.label;
  conflict = false;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : grounded) {
      if (c.kind == ConstraintKind::Backward) continue;
      const auto p = labels.find(c.premise.key());
      if (p == labels.end() || p->second != Label::True) continue;
      const auto [it, inserted] = labels.emplace(c.conclusion.key(), c.conclusion_label);
      if (inserted) {
        changed = true;
      } else if (it->second != c.conclusion_label) {
        conflict = true;
      }
    }
  }
  return labels;
}

// Two cases whose F1 is perfect only at lambda = 0.5 when a = 1, b = -3:
// the first needs a confident rule (raw 4, w = 0.731) to override a wrong
// belief held at 0.9, i.e. lambda < 0.81; the second must keep two correct
// beliefs held at 0.9 against a misleading rule (raw 2, w = 0.269), i.e.
// lambda > 0.30.
inline std::vector<CalibrationCase> planted_cases() {
  std::vector<CalibrationCase> cases;
  for (int i = 0; i < 3; ++i) {
    const std::string e = "fix" + std::to_string(i);
    CalibrationCase c{e, BeliefBank(e), {}, {}};
    ConstraintGraph g;
    g.add(rule(isa("p"), isa("q"), Label::True, 0.0, ConstraintKind::Forward, 4.0));
    c.constraints = instantiate_graph(g, e);
    c.bank.upsert(belief(isa("p"), e, Label::True, 1.0));
    c.bank.upsert(belief(isa("q"), e, Label::False, 0.9));
    c.gold[ground_template(isa("p"), e).key()] = Label::True;
    c.gold[ground_template(isa("q"), e).key()] = Label::True;
    cases.push_back(std::move(c));
  }
  for (int i = 0; i < 3; ++i) {
    const std::string e = "keep" + std::to_string(i);
    CalibrationCase c{e, BeliefBank(e), {}, {}};
    ConstraintGraph g;
    g.add(rule(isa("p"), isa("q"), Label::True, 0.0, ConstraintKind::Forward, 2.0));
    c.constraints = instantiate_graph(g, e);
    c.bank.upsert(belief(isa("p"), e, Label::True, 0.9));
    c.bank.upsert(belief(isa("q"), e, Label::False, 0.9));
    c.gold[ground_template(isa("p"), e).key()] = Label::True;
    c.gold[ground_template(isa("q"), e).key()] = Label::False;
    cases.push_back(std::move(c));
  }
  return cases;
}

inline GridSpec planted_grid() {
  GridSpec grid;
  grid.a = {1.0};
  grid.b = {-3.0};
  grid.backward_multiplier = {0.25};
  grid.mutex_multiplier = {1.0};
  return grid;
}

}  // namespace bbtest
