// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "beliefbank/errors.hpp"
#include "beliefbank/types.hpp"

namespace beliefbank {

struct Query {
  Statement statement;
  std::string question_text;
  std::optional<std::string> context;
};

/// Interrogative form of a statement: "Is a swallow a bird?",
/// "Does a swallow have gills?", "Can a swallow fly?".
std::string render_question(const Statement& statement);

/// Query with the rendered question. An empty context string counts as no
/// context.
Query make_query(const Statement& statement,
                 std::optional<std::string> context = std::nullopt);

/// "CONTEXT <sentences> QUERY <question>", or just the question.
std::string format_prompt(const Query& query);

struct OracleAnswer {
  Label label = Label::False;
  double confidence = 0.0;
};

enum class OracleErrorKind : std::uint8_t {
  Timeout,
  Transport,
  Status,
  Malformed,
  Refusal,
  UnknownStatement,
};

std::string_view to_string(OracleErrorKind kind);

class OracleError : public Error {
 public:
  OracleError(OracleErrorKind kind, const std::string& message)
      : OracleError(kind, message, kind == OracleErrorKind::Timeout ||
                                       kind == OracleErrorKind::Transport ||
                                       kind == OracleErrorKind::Status) {}
  OracleError(OracleErrorKind kind, const std::string& message, bool retriable)
      : Error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        retriable_(retriable) {}

  OracleErrorKind kind() const noexcept { return kind_; }

  /// Transport-level failures may succeed on retry; answers never do.
  bool retriable() const noexcept { return retriable_; }

 private:
  OracleErrorKind kind_;
  bool retriable_;
};

/// A true/false question answerer. Implementations must return the same
/// answer for the same query and must be safe to call concurrently.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual OracleAnswer ask(const Query& query) = 0;
};

/// Error and confidence model of the synthetic oracle.
struct SyntheticOracleProfile {
  double false_positive_rate = 0.40;
  double false_negative_rate = 0.03;
  // Beta(alpha, beta) confidences for correct and incorrect answers.
  double correct_alpha = 8.0;
  double correct_beta = 2.0;
  double wrong_alpha = 4.0;
  double wrong_beta = 3.0;
  /// Chance that a context belief clashing with a wrong answer fixes it.
  double context_correction_prob = 0.6;
  /// Chance that a context belief clashing with a right answer breaks it.
  double context_miscorrection_prob = 0.1;
  std::uint64_t seed = 0;

  void validate() const;

  /// Error rates giving the requested recall and precision on data whose
  /// True share is `true_fraction`; the other fields keep their defaults.
  static SyntheticOracleProfile tuned(double recall, double precision,
                                      double true_fraction,
                                      std::uint64_t seed = 0);

  friend bool operator==(const SyntheticOracleProfile&,
                         const SyntheticOracleProfile&) = default;
};

struct LabeledStatement {
  Statement statement;
  Label label = Label::False;
};

/// Noisy stand-in for a QA model over a hidden gold table.
///
/// Stateless apart from construction-time indexes; every draw is seeded by
/// hashing the profile seed with the statement (and context), so answers
/// are reproducible and the oracle is safe to share between threads.
class SyntheticOracle : public Oracle {
 public:
  SyntheticOracle(SyntheticOracleProfile profile,
                  std::span<const LabeledStatement> gold,
                  ConstraintGraph graph);

  OracleAnswer ask(const Query& query) override;

  /// The answer model. Without context, gold is flipped at the profile's
  /// error rate. With context, a context belief that clashes (through one
  /// constraint) with the context-free answer moves a wrong answer to gold
  /// with context_correction_prob, or a right answer away from gold with
  /// context_miscorrection_prob.
  OracleAnswer answer(const Statement& statement, Label gold,
                      std::string_view context) const;

  /// Gold label from the hidden table; throws OracleError(UnknownStatement).
  Label gold(const StatementKey& key) const;

  /// Beliefs recognised in a context string; unknown sentences are skipped.
  std::vector<std::pair<StatementKey, Label>> parse_context(
      std::string_view context) const;

  const SyntheticOracleProfile& profile() const { return profile_; }

 private:
  bool clashes(const StatementKey& query, Label answer,
               const StatementKey& other, Label other_label) const;

  SyntheticOracleProfile profile_;
  std::map<StatementKey, Label> gold_;
  std::map<std::string, std::pair<StatementKey, Label>, std::less<>> sentences_;
  ConstraintGraph graph_;
};

}  // namespace beliefbank
