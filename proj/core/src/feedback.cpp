// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/feedback.hpp"

#include <algorithm>
#include <map>

#include "beliefbank/errors.hpp"
#include "beliefbank/metrics.hpp"
#include "beliefbank/random.hpp"

namespace beliefbank {

namespace {

void require_k(std::size_t k) {
  if (k == 0) throw ConfigError("feedback needs k >= 1");
}

// Partial Fisher-Yates over the candidate list.
std::vector<const Belief*> sample(std::vector<const Belief*> candidates,
                                  std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t take = std::min(k, candidates.size());
  for (std::size_t i = 0; i < take; ++i) {
    const auto j = i + rng.below(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(take);
  return candidates;
}

}  // namespace

FeedbackSelection select_random(const BeliefBank& bank, const Statement& query,
                                std::size_t k, std::uint64_t seed) {
  require_k(k);
  const StatementKey qkey = query.key();
  std::vector<const Belief*> candidates;
  for (const auto& [key, belief] : bank) {
    if (!(key == qkey)) candidates.push_back(&belief);
  }
  FeedbackSelection selection{query, {}, {}, FeedbackPolicy::Random};
  for (const Belief* b : sample(std::move(candidates), k, seed)) {
    selection.chosen.push_back(*b);
  }
  return selection;
}

FeedbackSelection select_relevant(const BeliefBank& bank,
                                  const GroundedGraph& graph,
                                  const Statement& query, std::size_t k) {
  require_k(k);
  const StatementKey qkey = query.key();
  std::map<StatementKey, double> strongest;
  for (const std::size_t index : graph.incident(qkey)) {
    const GroundedConstraint& c = graph.constraints()[index];
    const bool query_is_premise = c.premise.key() == qkey;
    const StatementKey other =
        query_is_premise ? c.conclusion.key() : c.premise.key();
    if (other == qkey) continue;
    const Belief* belief = bank.find(other);
    if (belief == nullptr) continue;
    for (Label hypothesis : {Label::True, Label::False}) {
      const bool clash =
          query_is_premise ? violates(c, hypothesis, belief->label)
                           : violates(c, belief->label, hypothesis);
      if (!clash) continue;
      const double strength = c.weight * belief->weight;
      auto [it, inserted] = strongest.emplace(other, strength);
      if (!inserted) it->second = std::max(it->second, strength);
    }
  }

  std::vector<std::pair<StatementKey, double>> ranked(strongest.begin(),
                                                      strongest.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) {
                     return x.second > y.second;
                   });
  if (ranked.size() > k) ranked.resize(k);

  FeedbackSelection selection{query, {}, {}, FeedbackPolicy::GraphRelevance};
  for (const auto& [key, strength] : ranked) {
    selection.chosen.push_back(*bank.find(key));
    selection.scores.push_back(strength);
  }
  return selection;
}

FeedbackSelection select_relevant_padded(const BeliefBank& bank,
                                         const GroundedGraph& graph,
                                         const Statement& query, std::size_t k,
                                         std::uint64_t seed) {
  FeedbackSelection selection = select_relevant(bank, graph, query, k);
  if (selection.chosen.size() >= k) return selection;

  const StatementKey qkey = query.key();
  std::vector<const Belief*> candidates;
  for (const auto& [key, belief] : bank) {
    if (key == qkey || key.entity != query.entity) continue;
    const bool taken = std::any_of(
        selection.chosen.begin(), selection.chosen.end(),
        [&](const Belief& b) { return b.statement.key() == key; });
    if (!taken) candidates.push_back(&belief);
  }
  for (const Belief* b :
       sample(std::move(candidates), k - selection.chosen.size(), seed)) {
    selection.chosen.push_back(*b);
    selection.scores.push_back(0.0);
  }
  return selection;
}

std::string build_context(const FeedbackSelection& selection) {
  std::string context;
  for (const Belief& b : selection.chosen) {
    if (!context.empty()) context.push_back(' ');
    context += render_sentence(b.statement, b.label);
  }
  return context;
}

}  // namespace beliefbank
