// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "fixtures.hpp"

namespace {

using namespace bbtest;

std::vector<std::string> texts(const FeedbackSelection& s) {
  std::vector<std::string> out;
  for (const auto& b : s.chosen) out.push_back(render_sentence(b.statement, b.label));
  return out;
}

TEST(SelectRandom, FewerThanK) {
  BeliefBank bank;
  bank.upsert(belief(isa("dog"), "poodle", Label::True, 0.9));
  bank.upsert(belief(isa("cat"), "poodle", Label::False, 0.9));
  const auto query = ground_template(isa("animal"), "poodle");
  EXPECT_EQ(select_random(bank, query, 3, 1).chosen.size(), 2U);
}

TEST(SelectRandom, ExcludesQuery) {
  PoodleFixture f;
  const auto dog = ground_template(isa("dog"), "poodle");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& b : select_random(f.bank, dog, 6, seed).chosen) {
      EXPECT_NE(b.statement.key(), dog.key());
    }
  }
}

TEST(SelectRandom, SameSeedSameSelection) {
  PoodleFixture f;
  EXPECT_EQ(texts(select_random(f.bank, f.query, 3, 77)),
            texts(select_random(f.bank, f.query, 3, 77)));
}

TEST(SelectRandom, RejectsZeroK) {
  PoodleFixture f;
  EXPECT_THROW(select_random(f.bank, f.query, 0, 1), ConfigError);
}

TEST(SelectRandom, UniformOverBank) {
  BeliefBank bank;
  for (int i = 0; i < 10; ++i) {
    bank.upsert(belief(isa("c" + std::to_string(i)), "e", Label::True, 0.5));
  }
  const auto query = ground_template(isa("query"), "e");
  std::map<StatementKey, int> counts;
  const int draws = 10000;
  for (int d = 0; d < draws; ++d) {
    for (const auto& b : select_random(bank, query, 3, mix_seed(5, d)).chosen) {
      ++counts[b.statement.key()];
    }
  }
  ASSERT_EQ(counts.size(), 10U);
  const double mean = draws * 0.3;
  const double sigma = std::sqrt(draws * 0.3 * 0.7);
  double chi2 = 0.0;
  for (const auto& [key, n] : counts) {
    EXPECT_LE(std::abs(n - mean), 3.0 * sigma);
    chi2 += (n - mean) * (n - mean) / mean;
  }
  // 9 degrees of freedom; 27.88 is the 0.999 quantile.
  EXPECT_LT(chi2, 27.88);
}

TEST(SelectRelevant, PoodleAnimal) {
  PoodleFixture f;
  const GroundedGraph graph(instantiate_graph(f.graph, "poodle"));
  const auto s = select_relevant(f.bank, graph, f.query, 3);
  EXPECT_EQ(texts(s), (std::vector<std::string>{
                          "A poodle is a dog.", "A poodle is a mammal.",
                          "A poodle is a domesticated canine."}));
  EXPECT_TRUE(std::is_sorted(s.scores.rbegin(), s.scores.rend()));
}

TEST(SelectRelevant, EmptyBank) {
  PoodleFixture f;
  const GroundedGraph graph(instantiate_graph(f.graph, "poodle"));
  EXPECT_TRUE(select_relevant(BeliefBank{}, graph, f.query, 3).chosen.empty());
}

TEST(SelectRelevant, PaddingFillsToK) {
  PoodleFixture f;
  const GroundedGraph graph(instantiate_graph(f.graph, "poodle"));
  const auto tail = ground_template(make_template(Relation::HasA, "tail"), "poodle");
  const auto plain = select_relevant(f.bank, graph, tail, 3);
  const auto padded = select_relevant_padded(f.bank, graph, tail, 3, 4);
  EXPECT_LT(plain.chosen.size(), 3U);
  EXPECT_EQ(padded.chosen.size(), 3U);
  EXPECT_EQ(padded.scores.back(), 0.0);
}

// Exhaustive scoring over every (belief, hypothesis, constraint) triple.
std::vector<std::pair<StatementKey, double>> brute_force_scores(
    const BeliefBank& bank, const std::vector<GroundedConstraint>& grounded,
    const StatementKey& query) {
  std::map<StatementKey, double> best;
  for (const auto& [key, b] : bank) {
    if (key == query) continue;
    for (Label h : {Label::True, Label::False}) {
      for (const auto& c : grounded) {
        Label premise;
        Label conclusion;
        if (c.premise.key() == query && c.conclusion.key() == key) {
          premise = h;
          conclusion = b.label;
        } else if (c.premise.key() == key && c.conclusion.key() == query) {
          premise = b.label;
          conclusion = h;
        } else {
          continue;
        }
        if (premise == Label::True && conclusion != c.conclusion_label) {
          best[key] = std::max(best[key], c.weight * b.weight);
        }
      }
    }
  }
  std::vector<std::pair<StatementKey, double>> ranked(best.begin(), best.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  return ranked;
}

TEST(SelectRelevant, MatchesBruteForceRescoring) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = random_scenario(seed, 50, 200);
    const GroundedGraph graph(s.constraints);
    for (std::size_t q = 0; q < 50; q += 7) {
      const auto& query = std::next(s.bank.begin(), static_cast<long>(q))->second.statement;
      const auto expected = brute_force_scores(s.bank, s.constraints, query.key());
      const auto got = select_relevant(s.bank, graph, query, 3);
      const std::size_t n = std::min<std::size_t>(3, expected.size());
      ASSERT_EQ(got.chosen.size(), n) << seed;
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(got.chosen[i].statement.key(), expected[i].first) << seed;
        EXPECT_DOUBLE_EQ(got.scores[i], expected[i].second) << seed;
      }
    }
  }
}

TEST(BuildContext, SwallowIsNotAFish) {
  FeedbackSelection s;
  s.chosen.push_back(belief(isa("fish"), "swallow", Label::False, 0.9));
  EXPECT_EQ(build_context(s), "A swallow is not a fish.");
}

TEST(BuildContext, EmptySelection) {
  EXPECT_EQ(build_context(FeedbackSelection{}), "");
}

TEST(BuildContext, ThreeSentencesInOrder) {
  PoodleFixture f;
  const GroundedGraph graph(instantiate_graph(f.graph, "poodle"));
  EXPECT_EQ(build_context(select_relevant(f.bank, graph, f.query, 3)),
            "A poodle is a dog. A poodle is a mammal. "
            "A poodle is a domesticated canine.");
}

}  // namespace
