// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "beliefbank/errors.hpp"
#include "beliefbank/random.hpp"

namespace beliefbank {

void TaxonomySpec::validate() const {
  if (concept_count == 0 || entity_count == 0 || mutex_subtree_count == 0) {
    throw ConfigError("taxonomy counts must be positive");
  }
  double total = 0.0;
  for (const auto& [relation, share] : relation_mix) {
    if (!(share >= 0.0)) throw ConfigError("relation shares must be >= 0");
    total += share;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ConfigError("relation mix proportions must sum to 1");
  }
  const auto isa = relation_mix.find(Relation::IsA);
  if (isa == relation_mix.end() || isa->second <= 0.0) {
    throw ConfigError("relation mix needs a positive IsA share");
  }
  const auto taxonomy = static_cast<std::size_t>(
      std::llround(isa->second * static_cast<double>(concept_count)));
  if (mutex_subtree_count > taxonomy) {
    throw ConfigError("more mutex subtrees (" +
                      std::to_string(mutex_subtree_count) +
                      ") than taxonomy concepts (" + std::to_string(taxonomy) +
                      ")");
  }
  if (calibration_entities >= entity_count) {
    throw ConfigError("calibration entities must leave evaluation entities");
  }
  if (!(backward_discount > 0.0 && backward_discount <= 4.0)) {
    throw ConfigError("backward discount must lie in (0,4]");
  }
}

TaxonomySpec TaxonomySpec::desk() { return TaxonomySpec{}; }

TaxonomySpec TaxonomySpec::full_scale() {
  TaxonomySpec spec;
  spec.concept_count = 400;
  spec.entity_count = 27;
  spec.calibration_entities = 7;
  spec.relation_mix = {
      {Relation::IsA, 0.44},        {Relation::HasA, 0.12},
      {Relation::MadeOf, 0.10},     {Relation::PartOf, 0.10},
      {Relation::HasProperty, 0.12}, {Relation::CapableOf, 0.12},
  };
  return spec;
}

std::vector<FactRecord> Dataset::facts_for(std::string_view entity) const {
  std::vector<FactRecord> out;
  for (const auto& f : facts) {
    if (f.statement.entity == entity) out.push_back(f);
  }
  return out;
}

GoldLabels Dataset::gold_for(std::string_view entity) const {
  GoldLabels gold;
  for (const auto& f : facts) {
    if (f.statement.entity == entity) gold.emplace(f.statement.key(), f.gold_label);
  }
  return gold;
}

std::vector<LabeledStatement> Dataset::gold_table() const {
  std::vector<LabeledStatement> table;
  table.reserve(facts.size());
  for (const auto& f : facts) table.push_back({f.statement, f.gold_label});
  return table;
}

double Dataset::true_fraction() const {
  if (facts.empty()) return 0.0;
  const auto t = std::count_if(facts.begin(), facts.end(), [](const auto& f) {
    return is_true(f.gold_label);
  });
  return static_cast<double>(t) / static_cast<double>(facts.size());
}

namespace {

// Pronounceable, unique five-letter names.
class NameSource {
 public:
  explicit NameSource(std::uint64_t seed) : rng_(seed) {}

  std::string next() {
    static constexpr std::string_view kConsonants = "bdfgklmnprtvz";
    static constexpr std::string_view kVowels = "aeiou";
    for (;;) {
      std::string name;
      for (int i = 0; i < 5; ++i) {
        const auto& pool = (i % 2 == 0) ? kConsonants : kVowels;
        name.push_back(pool[rng_.below(pool.size())]);
      }
      if (used_.insert(name).second) return name;
    }
  }

 private:
  Rng rng_;
  std::set<std::string> used_;
};

// Largest-remainder allocation of `total` over the mix.
std::map<Relation, std::size_t> allocate(const TaxonomySpec& spec) {
  std::map<Relation, std::size_t> counts;
  std::vector<std::pair<double, Relation>> remainders;
  std::size_t assigned = 0;
  for (Relation r : kAllRelations) {
    const auto it = spec.relation_mix.find(r);
    const double exact =
        (it == spec.relation_mix.end() ? 0.0 : it->second) *
        static_cast<double>(spec.concept_count);
    counts[r] = static_cast<std::size_t>(std::floor(exact));
    assigned += counts[r];
    remainders.emplace_back(exact - std::floor(exact), r);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  for (std::size_t i = 0; assigned < spec.concept_count; ++i, ++assigned) {
    ++counts[remainders[i % remainders.size()].second];
  }
  counts[Relation::IsA] = std::max(counts[Relation::IsA], spec.mutex_subtree_count);
  return counts;
}

struct Concept {
  std::string name;
  std::size_t subtree = 0;
  std::optional<std::size_t> parent;
  bool has_children = false;
};

double forward_score(Rng& rng) { return rng.bernoulli(0.5) ? 4.0 : 3.0; }

}  // namespace

Dataset generate(const TaxonomySpec& spec) {
  spec.validate();
  Rng rng(mix_seed(spec.seed, "taxonomy"));
  NameSource names(mix_seed(spec.seed, "names"));
  const auto counts = allocate(spec);

  std::vector<Concept> taxonomy;
  for (std::size_t i = 0; i < counts.at(Relation::IsA); ++i) {
    Concept c{names.next(), i, std::nullopt, false};
    if (i >= spec.mutex_subtree_count) {
      const std::size_t parent = rng.below(taxonomy.size());
      c.parent = parent;
      c.subtree = taxonomy[parent].subtree;
      taxonomy[parent].has_children = true;
    }
    taxonomy.push_back(std::move(c));
  }

  Dataset data;
  ConstraintGraph& graph = data.graph;
  const auto isa = [&](std::size_t i) {
    return make_template(Relation::IsA, taxonomy[i].name);
  };
  const auto add_pair = [&](const StatementTemplate& from,
                            const StatementTemplate& to) {
    const double raw = forward_score(rng);
    graph.add({from, to, Label::True, raw, 1.0, ConstraintKind::Forward});
    graph.add({to, from, Label::True, std::max(0.0, raw - spec.backward_discount),
               1.0, ConstraintKind::Backward});
  };

  for (std::size_t i = 0; i < taxonomy.size(); ++i) {
    graph.add_template(isa(i));
    if (taxonomy[i].parent) add_pair(isa(i), isa(*taxonomy[i].parent));
  }

  // Properties: each object hangs off one taxonomy concept.
  std::vector<std::size_t> property_owner_subtree;
  std::vector<std::pair<StatementTemplate, std::size_t>> properties;
  for (Relation r : kAllRelations) {
    if (r == Relation::IsA) continue;
    for (std::size_t i = 0; i < counts.at(r); ++i) {
      const auto tmpl = make_template(r, names.next());
      const std::size_t owner = rng.below(taxonomy.size());
      add_pair(isa(owner), tmpl);
      properties.emplace_back(tmpl, owner);
    }
  }

  for (std::size_t i = 0; i < taxonomy.size(); ++i) {
    for (std::size_t j = i + 1; j < taxonomy.size(); ++j) {
      if (taxonomy[i].subtree == taxonomy[j].subtree) continue;
      graph.add({isa(i), isa(j), Label::False, 4.0, 1.0,
                 ConstraintKind::MutexHalf});
      graph.add({isa(j), isa(i), Label::False, 4.0, 1.0,
                 ConstraintKind::MutexHalf});
    }
  }
  graph.validate();

  for (std::size_t e = 0; e < spec.entity_count; ++e) {
    data.entities.push_back(names.next());
  }
  std::sort(data.entities.begin(), data.entities.end());

  for (const auto& entity : data.entities) {
    const std::size_t home = rng.below(spec.mutex_subtree_count);
    const auto grounded = instantiate_graph(graph, entity);

    std::vector<LabeledStatement> leaves;
    for (std::size_t i = 0; i < taxonomy.size(); ++i) {
      if (taxonomy[i].has_children) continue;
      leaves.push_back({ground_template(isa(i), entity),
                        to_label(taxonomy[i].subtree == home)});
    }
    PropagationResult propagated = propagate_labels(grounded, leaves);
    if (!propagated.conflicts.empty()) {
      throw StructuralError("generated taxonomy produced a labelling conflict");
    }

    std::set<StatementKey> labelled;
    for (auto& fact : propagated.facts) {
      labelled.insert(fact.statement.key());
      data.facts.push_back(std::move(fact));
    }
    // Statements no annotated leaf reaches: properties of foreign subtrees.
    for (const auto& [id, tmpl] : graph.templates()) {
      Statement s = ground_template(tmpl, entity);
      if (!labelled.contains(s.key())) {
        data.facts.push_back({std::move(s), Label::False, false});
      }
    }
  }
  std::sort(data.facts.begin(), data.facts.end(),
            [](const FactRecord& x, const FactRecord& y) {
              return std::tie(x.statement.entity, x.statement.template_id) <
                     std::tie(y.statement.entity, y.statement.template_id);
            });

  const auto split = split_calibration(data.entities, spec.calibration_entities,
                                       mix_seed(spec.seed, "split"));
  data.calibration_entities = split.calibration;
  data.evaluation_entities = split.evaluation;
  return data;
}

std::vector<StatementKey> source_statements(
    std::span<const GroundedConstraint> grounded) {
  std::set<StatementKey> all;
  std::set<StatementKey> implied;
  for (const auto& c : grounded) {
    all.insert(c.premise.key());
    all.insert(c.conclusion.key());
    if (c.kind == ConstraintKind::Forward) implied.insert(c.conclusion.key());
  }
  std::vector<StatementKey> sources;
  std::set_difference(all.begin(), all.end(), implied.begin(), implied.end(),
                      std::back_inserter(sources));
  return sources;
}

PropagationResult propagate_labels(std::span<const GroundedConstraint> grounded,
                                   std::span<const LabeledStatement> leaves) {
  std::map<StatementKey, std::vector<const GroundedConstraint*>> outgoing;
  std::map<StatementKey, const Statement*> statements;
  for (const auto& c : grounded) {
    statements.emplace(c.premise.key(), &c.premise);
    statements.emplace(c.conclusion.key(), &c.conclusion);
    if (c.kind == ConstraintKind::Backward) continue;
    outgoing[c.premise.key()].push_back(&c);
  }

  // Each derived label remembers the True statement that forced it.
  using Parent = std::optional<StatementKey>;
  std::map<StatementKey, Parent> forced_true;
  std::map<StatementKey, Parent> forced_false;
  std::set<StatementKey> annotated;
  std::deque<StatementKey> queue;
  for (const auto& leaf : leaves) {
    const StatementKey key = leaf.statement.key();
    statements.emplace(key, &leaf.statement);
    annotated.insert(key);
    if (is_true(leaf.label)) {
      if (forced_true.emplace(key, std::nullopt).second) queue.push_back(key);
    } else {
      forced_false.emplace(key, std::nullopt);
    }
  }

  while (!queue.empty()) {
    const StatementKey premise = queue.front();
    queue.pop_front();
    const auto it = outgoing.find(premise);
    if (it == outgoing.end()) continue;
    for (const GroundedConstraint* c : it->second) {
      const StatementKey conclusion = c->conclusion.key();
      if (is_true(c->conclusion_label)) {
        if (forced_true.emplace(conclusion, premise).second) {
          queue.push_back(conclusion);
        }
      } else {
        forced_false.emplace(conclusion, premise);
      }
    }
  }

  const auto true_chain = [&](StatementKey key) {
    std::vector<StatementKey> chain{key};
    while (const auto& parent = forced_true.at(chain.back())) {
      chain.push_back(*parent);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  PropagationResult result;
  for (const auto& [key, parent] : forced_true) {
    if (forced_false.contains(key)) {
      const auto& false_parent = forced_false.at(key);
      std::vector<StatementKey> false_chain;
      if (false_parent) false_chain = true_chain(*false_parent);
      false_chain.push_back(key);
      result.conflicts.push_back({key, true_chain(key), std::move(false_chain)});
      continue;
    }
    result.facts.push_back(
        {*statements.at(key), Label::True, !annotated.contains(key)});
  }
  for (const auto& [key, parent] : forced_false) {
    if (forced_true.contains(key)) continue;
    result.facts.push_back(
        {*statements.at(key), Label::False, !annotated.contains(key)});
  }
  std::sort(result.facts.begin(), result.facts.end(),
            [](const FactRecord& x, const FactRecord& y) {
              return x.statement.key() < y.statement.key();
            });
  return result;
}

CalibrationSplit split_calibration(std::vector<std::string> entities,
                                   std::size_t calibration_count,
                                   std::uint64_t seed) {
  std::sort(entities.begin(), entities.end());
  entities.erase(std::unique(entities.begin(), entities.end()), entities.end());
  if (entities.size() < 2) {
    throw ConfigError("calibration split needs at least two entities");
  }
  if (calibration_count == 0 || calibration_count >= entities.size()) {
    throw ConfigError("calibration count must lie in [1, " +
                      std::to_string(entities.size() - 1) + "]");
  }
  Rng rng(seed);
  rng.shuffle(entities);
  CalibrationSplit split;
  split.calibration.assign(entities.begin(),
                           entities.begin() + static_cast<std::ptrdiff_t>(calibration_count));
  split.evaluation.assign(entities.begin() + static_cast<std::ptrdiff_t>(calibration_count),
                          entities.end());
  std::sort(split.calibration.begin(), split.calibration.end());
  std::sort(split.evaluation.begin(), split.evaluation.end());
  return split;
}

CalibrationSplit split_calibration_fraction(std::vector<std::string> entities,
                                            double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw ConfigError("calibration fraction must lie in (0,1)");
  }
  const auto n = static_cast<double>(entities.size());
  const auto count = static_cast<std::size_t>(
      std::clamp(std::llround(fraction * n), 1LL,
                 static_cast<long long>(std::max<std::size_t>(entities.size(), 2) - 1)));
  return split_calibration(std::move(entities), count, seed);
}

}  // namespace beliefbank
