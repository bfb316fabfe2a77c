// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "beliefbank/belief_bank.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

enum class FeedbackPolicy : std::uint8_t { Random, GraphRelevance };

/// Beliefs chosen as context for re-asking `query`.
struct FeedbackSelection {
  Statement query;
  std::vector<Belief> chosen;
  /// Clash strength per chosen belief; empty for the random policy. Padding
  /// beliefs added by select_relevant_padded score 0.
  std::vector<double> scores;
  FeedbackPolicy policy = FeedbackPolicy::Random;
};

/// Uniform sample without replacement of min(k, |bank| - 1) beliefs other
/// than the query. Deterministic in `seed`.
FeedbackSelection select_random(const BeliefBank& bank, const Statement& query,
                                std::size_t k, std::uint64_t seed);

/// Top-k beliefs by clash strength with either hypothetical answer.
///
/// A belief b clashes with hypothesis (query, a) when a single grounded
/// constraint linking the two is violated by the pair; its strength is
/// constraint weight times b's weight. Candidates from both hypotheses are
/// pooled keeping each belief's strongest clash, then ranked by strength
/// with ties broken by statement key.
FeedbackSelection select_relevant(const BeliefBank& bank,
                                  const GroundedGraph& graph,
                                  const Statement& query, std::size_t k);

/// select_relevant, padded with random beliefs about the query's entity
/// when fewer than k clashes exist.
FeedbackSelection select_relevant_padded(const BeliefBank& bank,
                                         const GroundedGraph& graph,
                                         const Statement& query, std::size_t k,
                                         std::uint64_t seed);

/// Chosen beliefs as declarative sentences ("A swallow is not a fish."),
/// in selection order, separated by single spaces.
std::string build_context(const FeedbackSelection& selection);

}  // namespace beliefbank
