// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/quality.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "beliefbank/calibration_params.hpp"
#include "beliefbank/errors.hpp"
#include "beliefbank/random.hpp"

namespace beliefbank {

double brute_force_cost(const MaxSatProblem& problem,
                        const std::vector<bool>& bits) {
  double cost = 0.0;
  for (const auto& clause : problem.clauses) {
    bool satisfied = false;
    for (const auto& lit : clause.literals) {
      if (bits.at(lit.var) == lit.positive) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) cost += clause.weight;
  }
  return cost;
}

namespace {

double total_weight(const MaxSatProblem& problem) {
  double total = 0.0;
  for (const auto& clause : problem.clauses) {
    if (!clause.is_hard()) total += clause.weight;
  }
  return total;
}

}  // namespace

BruteForceResult brute_force_maxsat(const MaxSatProblem& problem) {
  const std::size_t n = problem.variables.size();
  if (n > kBruteForceCap) throw SizingError(n, kBruteForceCap);
  const double eps = 1e-12 * std::max(1.0, total_weight(problem));

  BruteForceResult result;
  result.cost = std::numeric_limits<double>::infinity();
  std::vector<bool> bits(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = ((mask >> i) & 1U) != 0;
    const double cost = brute_force_cost(problem, bits);
    if (std::isinf(cost)) continue;
    if (cost < result.cost - eps) {
      result.cost = cost;
      result.optima.clear();
    }
    if (std::abs(cost - result.cost) <= eps) result.optima.push_back(bits);
  }
  return result;
}

MaxSatProblem random_problem(std::uint64_t seed, std::size_t variables,
                             std::size_t binary_clauses) {
  Rng rng(seed);
  MaxSatProblem p = MaxSatProblem::with_variables(variables);
  for (std::uint32_t v = 0; v < variables; ++v) {
    p.clauses.push_back({{{v, rng.bernoulli(0.5)}}, 0.01 + rng.uniform()});
  }
  if (variables < 2) return p;
  for (std::size_t c = 0; c < binary_clauses; ++c) {
    const auto x = static_cast<std::uint32_t>(rng.below(variables));
    auto y = static_cast<std::uint32_t>(rng.below(variables - 1));
    if (y >= x) ++y;
    p.clauses.push_back(
        {{{x, rng.bernoulli(0.5)}, {y, rng.bernoulli(0.5)}},
         0.01 + 2.0 * rng.uniform()});
  }
  return p;
}

Scenario random_scenario(std::uint64_t seed, std::size_t statements,
                         std::size_t constraints, bool satisfiable) {
  Rng rng(seed);
  Scenario s;
  s.bank = BeliefBank(std::string("zeta"));
  std::vector<Statement> pool;
  std::vector<Label> hidden;
  for (std::size_t i = 0; i < statements; ++i) {
    const Relation r = kAllRelations[i % std::size(kAllRelations)];
    const auto tmpl = make_template(r, "thing" + std::to_string(i));
    pool.push_back(ground_template(tmpl, "zeta"));
    hidden.push_back(to_label(rng.bernoulli(0.5)));
    s.bank.upsert({pool.back(), to_label(rng.bernoulli(0.5)),
                   0.05 + 0.95 * rng.uniform(), Provenance::RawModel});
  }
  if (statements < 2) return s;
  for (std::size_t c = 0; c < constraints; ++c) {
    const std::size_t i = rng.below(statements);
    std::size_t j = rng.below(statements - 1);
    if (j >= i) ++j;
    auto kind = static_cast<ConstraintKind>(rng.below(3));
    Label label = kind == ConstraintKind::MutexHalf
                      ? Label::False
                      : to_label(rng.bernoulli(0.8));
    if (satisfiable) {
      label = hidden[j];
      if (is_true(label) && kind == ConstraintKind::MutexHalf) {
        kind = ConstraintKind::Forward;
      }
    }
    GroundedConstraint g;
    g.premise = pool[i];
    g.conclusion = pool[j];
    g.conclusion_label = label;
    g.raw_score = static_cast<double>(rng.below(5));
    g.weight = 0.05 + 0.95 * rng.uniform();
    g.kind = kind;
    g.source = c;
    s.constraints.push_back(std::move(g));
  }
  return s;
}

ConsistencyReport recount_consistency(
    const BeliefBank& bank, const std::vector<GroundedConstraint>& grounded) {
  ConsistencyReport r;
  for (std::size_t i = 0; i < grounded.size(); ++i) {
    bool premise_true = false;
    bool conclusion_found = false;
    Label conclusion = Label::False;
    for (const auto& [key, belief] : bank.entries()) {
      if (key == grounded[i].premise.key() && belief.label == Label::True) {
        premise_true = true;
      }
      if (key == grounded[i].conclusion.key()) {
        conclusion_found = true;
        conclusion = belief.label;
      }
    }
    if (!premise_true) continue;
    r.applicable_count += 1;
    if (!conclusion_found || conclusion != grounded[i].conclusion_label) {
      r.violated_count += 1;
      r.violated_constraints.push_back(i);
    }
  }
  r.tau = r.applicable_count == 0
              ? 0.0
              : double(r.violated_count) / double(r.applicable_count);
  r.consistency = 1.0 - r.tau;
  return r;
}

AccuracyReport recount_f1(const BeliefBank& bank, const GoldLabels& gold) {
  AccuracyReport r;
  std::size_t seen = 0;
  for (const auto& [key, belief] : bank.entries()) {
    const auto it = gold.find(key);
    if (it == gold.end()) continue;
    ++seen;
    const int predicted = belief.label == Label::True ? 1 : 0;
    const int actual = it->second == Label::True ? 1 : 0;
    r.true_positives += predicted & actual;
    r.false_positives += predicted & (1 - actual);
    r.false_negatives += (1 - predicted) & actual;
    r.true_negatives += (1 - predicted) & (1 - actual);
  }
  r.empty = seen == 0;
  const double tp = double(r.true_positives);
  r.precision = r.true_positives + r.false_positives == 0
                    ? 0.0
                    : tp / double(r.true_positives + r.false_positives);
  r.recall = r.true_positives + r.false_negatives == 0
                 ? 0.0
                 : tp / double(r.true_positives + r.false_negatives);
  r.f1 = r.precision + r.recall == 0.0
             ? 0.0
             : 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

namespace {

struct InstanceOutcome {
  bool mismatch = false;
  bool regression = false;
  double gap = 0.0;
  std::string dump;
};

std::string dump_problem(std::uint64_t seed, const std::string& what,
                         const MaxSatProblem& problem) {
  std::ostringstream out;
  out << "seed " << seed << ": " << what << '\n';
  write_wcnf(out, problem);
  return out.str();
}

BeliefBank relabel(const BeliefBank& bank, const MaxSatProblem& problem,
                   const std::vector<bool>& bits) {
  BeliefBank out = bank;
  for (const auto& [key, belief] : bank.entries()) {
    Belief b = belief;
    b.label = to_label(bits[*problem.index_of(key)]);
    out.upsert(std::move(b));
  }
  return out;
}

InstanceOutcome check_instance(std::uint64_t seed, const FuzzOptions& options) {
  InstanceOutcome out;
  const Scenario s = random_scenario(seed, options.statements,
                                     options.constraints, options.satisfiable);
  CalibrationParams params;
  params.lambda = options.lambda;
  const MaxSatProblem problem = encode(s.bank, s.constraints, params);
  const auto fail = [&](const std::string& what) {
    out.mismatch = true;
    if (out.dump.empty()) out.dump = dump_problem(seed, what, problem);
  };

  // Encode/metrics agreement on a random assignment.
  Rng rng(mix_seed(seed, "bits"));
  std::vector<bool> bits(problem.variables.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng.bernoulli(0.5);
  const BeliefBank relabelled = relabel(s.bank, problem, bits);
  const auto violated = recount_consistency(relabelled, s.constraints);
  std::vector<std::size_t> falsified;
  const std::size_t units = s.bank.size();
  std::size_t unit_violations = 0;
  for (std::size_t c = 0; c < problem.clauses.size(); ++c) {
    const auto& clause = problem.clauses[c];
    const bool sat = std::any_of(
        clause.literals.begin(), clause.literals.end(),
        [&](const Literal& l) { return bits[l.var] == l.positive; });
    if (sat) continue;
    if (c < units) {
      ++unit_violations;
    } else {
      falsified.push_back(c - units);
    }
  }
  std::size_t disagreements = 0;
  for (const auto& [key, belief] : s.bank.entries()) {
    if (relabelled.find(key)->label != belief.label) ++disagreements;
  }
  if (falsified != violated.violated_constraints ||
      unit_violations != disagreements) {
    fail("falsified clauses disagree with violated beliefs/constraints");
  }

  // Exact solver against brute force.
  const auto reference = brute_force_maxsat(problem);
  const Assignment exact = solve_exact(problem);
  std::vector<bool> chosen(problem.variables.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    chosen[i] = is_true(exact.value(problem.variables[i]));
  }
  const double recomputed = brute_force_cost(problem, chosen);
  const double tol = 1e-12 * std::max(1.0, total_weight(problem));
  out.gap = std::abs(exact.cost - reference.cost);
  if (out.gap > tol || std::abs(recomputed - exact.cost) > tol ||
      std::find(reference.optima.begin(), reference.optima.end(), chosen) ==
          reference.optima.end()) {
    fail("exact solver is not optimal");
  }

  // Solving and consistency.
  BeliefBank solved = s.bank;
  apply_assignment(solved, exact);
  const double before = recount_consistency(s.bank, s.constraints).consistency;
  const double after = recount_consistency(solved, s.constraints).consistency;
  if (after < before - 1e-12) out.regression = true;
  if (options.satisfiable && options.lambda <= 1e-6 && after != 1.0) {
    fail("satisfiable instance not fully consistent at vanishing lambda");
  }
  return out;
}

}  // namespace

OracleCheckReport fuzz_pipeline(std::uint64_t first_seed, std::size_t count,
                                const FuzzOptions& options) {
  std::vector<InstanceOutcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        outcomes[i] = check_instance(first_seed + i, options);
      } catch (const std::exception& e) {
        outcomes[i].mismatch = true;
        outcomes[i].dump = "seed " + std::to_string(first_seed + i) + ": " + e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t threads = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(count, 1));
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  OracleCheckReport report;
  report.instances = count;
  for (const auto& o : outcomes) {
    report.max_cost_gap = std::max(report.max_cost_gap, o.gap);
    if (o.regression) ++report.consistency_regressions;
    if (o.mismatch) {
      ++report.mismatches;
      report.dumps.push_back(o.dump);
    }
  }
  return report;
}

}  // namespace beliefbank
