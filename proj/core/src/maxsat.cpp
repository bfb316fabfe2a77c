// Copyright 2026 The BeliefBank Authors
// SPDX-License-Identifier: Apache-2.0

#include "beliefbank/maxsat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

#include "beliefbank/errors.hpp"
#include "beliefbank/random.hpp"

namespace beliefbank {

std::optional<std::uint32_t> MaxSatProblem::index_of(
    const StatementKey& key) const {
  const auto it = std::lower_bound(variables.begin(), variables.end(), key);
  if (it == variables.end() || !(*it == key)) return std::nullopt;
  return static_cast<std::uint32_t>(it - variables.begin());
}

void MaxSatProblem::validate() const {
  if (!std::is_sorted(variables.begin(), variables.end()) ||
      std::adjacent_find(variables.begin(), variables.end()) !=
          variables.end()) {
    throw StructuralError("MaxSAT variables must be sorted and unique");
  }
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    if (clause.literals.empty()) {
      throw StructuralError("clause " + std::to_string(c) + " is empty");
    }
    if (!(clause.weight >= 0.0)) {
      throw StructuralError("clause " + std::to_string(c) +
                            " has a negative weight");
    }
    std::set<std::uint32_t> seen;
    for (const auto& lit : clause.literals) {
      if (lit.var >= variables.size()) {
        throw StructuralError("clause " + std::to_string(c) +
                              " references an unknown variable");
      }
      if (!seen.insert(lit.var).second) {
        throw StructuralError("clause " + std::to_string(c) +
                              " repeats a variable");
      }
    }
  }
}

MaxSatProblem MaxSatProblem::with_variables(std::size_t count) {
  MaxSatProblem p;
  p.variables.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    char name[24];
    std::snprintf(name, sizeof name, "v%03zu", i);
    p.variables.push_back({name, ""});
  }
  return p;
}

MaxSatProblem encode(const BeliefBank& bank,
                     std::span<const GroundedConstraint> grounded,
                     const CalibrationParams& params) {
  params.validate();
  MaxSatProblem problem;
  problem.lambda = params.lambda;

  std::set<StatementKey> keys;
  for (const auto& [key, belief] : bank) keys.insert(key);
  for (const auto& c : grounded) {
    keys.insert(c.premise.key());
    keys.insert(c.conclusion.key());
  }
  problem.variables.assign(keys.begin(), keys.end());

  const auto var = [&](const StatementKey& key) {
    return *problem.index_of(key);
  };
  problem.clauses.reserve(bank.size() + grounded.size());
  for (const auto& [key, belief] : bank) {
    problem.clauses.push_back(
        {{Literal{var(key), is_true(belief.label)}},
         params.lambda * belief.weight});
  }
  for (const auto& c : grounded) {
    if (c.premise.key() == c.conclusion.key()) {
      throw StructuralError("grounded constraint links a statement to itself");
    }
    problem.clauses.push_back(
        {{Literal{var(c.conclusion.key()), is_true(c.conclusion_label)},
          Literal{var(c.premise.key()), false}},
         c.weight * params.multiplier(c.kind)});
  }
  return problem;
}

Label Assignment::value(const StatementKey& key) const {
  const auto it = values.find(key);
  if (it == values.end()) {
    throw StructuralError("assignment has no value for " + to_string(key));
  }
  return it->second;
}

Evaluation evaluate(const MaxSatProblem& problem,
                    const std::vector<bool>& bits) {
  Evaluation e;
  for (const auto& clause : problem.clauses) {
    const bool satisfied = std::any_of(
        clause.literals.begin(), clause.literals.end(),
        [&](const Literal& lit) { return bits[lit.var] == lit.positive; });
    if (satisfied) continue;
    if (clause.is_hard()) {
      e.feasible = false;
    } else {
      e.cost += clause.weight;
    }
    if (clause.literals.size() == 1) ++e.unit_disagreements;
  }
  return e;
}

Assignment make_assignment(const MaxSatProblem& problem,
                           const std::vector<bool>& bits) {
  Assignment a;
  for (std::size_t i = 0; i < problem.variables.size(); ++i) {
    a.values.emplace_hint(a.values.end(), problem.variables[i],
                          to_label(bits[i]));
  }
  const Evaluation e = evaluate(problem, bits);
  a.cost = e.cost;
  a.feasible = e.feasible;
  return a;
}

namespace {

struct Occurrence {
  std::uint32_t clause;
  bool positive;
};

// Clause data shared by both solvers. Hard clauses get a finite weight that
// exceeds the sum of all soft weights.
struct Prepared {
  std::size_t n = 0;
  std::vector<double> weight;
  std::vector<std::vector<Literal>> literals;
  std::vector<std::vector<Occurrence>> occurrences;
  std::vector<double> unit_weight[2];   // [value][var]: unit weight satisfied
  std::vector<std::uint32_t> unit_count[2];
  double total_weight = 0.0;

  explicit Prepared(const MaxSatProblem& p) : n(p.variables.size()) {
    double soft = 0.0;
    for (const auto& c : p.clauses) {
      if (!c.is_hard()) soft += c.weight;
    }
    const double hard = soft + 1.0;
    occurrences.resize(n);
    for (int v = 0; v < 2; ++v) {
      unit_weight[v].assign(n, 0.0);
      unit_count[v].assign(n, 0);
    }
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
      const auto& c = p.clauses[i];
      const double w = c.is_hard() ? hard : c.weight;
      weight.push_back(w);
      literals.push_back(c.literals);
      total_weight += w;
      for (const auto& lit : c.literals) {
        occurrences[lit.var].push_back({static_cast<std::uint32_t>(i),
                                        lit.positive});
      }
      if (c.literals.size() == 1) {
        const auto& lit = c.literals.front();
        unit_weight[lit.positive][lit.var] += w;
        ++unit_count[lit.positive][lit.var];
      }
    }
  }

  // Belief-agreeing value; F when the unit clauses do not prefer T.
  bool preferred(std::size_t v) const {
    return unit_weight[1][v] > unit_weight[0][v];
  }

  std::vector<bool> preferred_bits() const {
    std::vector<bool> bits(n);
    for (std::size_t v = 0; v < n; ++v) bits[v] = preferred(v);
    return bits;
  }
};

// Objective order for the exact solver: cost within tolerance, then unit
// disagreements, then bits lexicographic with false < true.
struct Incumbent {
  std::vector<bool> bits;
  double cost = 0.0;
  std::size_t disagreements = 0;
};

class BranchAndBound {
 public:
  explicit BranchAndBound(const Prepared& prep)
      : prep_(prep),
        eps_(1e-12 * std::max(1.0, prep.total_weight)),
        assigned_(prep.n, false),
        value_(prep.n, false),
        sat_(prep.weight.size(), 0),
        false_(prep.weight.size(), 0) {
    pending_[0].assign(prep.n, 0.0);
    pending_[1].assign(prep.n, 0.0);
    for (std::size_t c = 0; c < prep.literals.size(); ++c) {
      if (prep.literals[c].size() == 1) {
        const auto& lit = prep.literals[c].front();
        pending_[!lit.positive][lit.var] += prep.weight[c];
      }
    }
    order_.resize(prep.n);
    std::iota(order_.begin(), order_.end(), 0u);
    std::vector<double> incident(prep.n, 0.0);
    for (std::size_t v = 0; v < prep.n; ++v) {
      for (const auto& occ : prep.occurrences[v]) {
        incident[v] += prep.weight[occ.clause];
      }
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t x, std::uint32_t y) {
                       return incident[x] > incident[y];
                     });
  }

  Incumbent run() {
    best_ = seed_incumbent();
    search(0);
    return best_;
  }

 private:
  Incumbent score(const std::vector<bool>& bits) const {
    const Evaluation e = evaluate_prepared(bits);
    return {bits, e.cost, e.unit_disagreements};
  }

  Evaluation evaluate_prepared(const std::vector<bool>& bits) const {
    Evaluation e;
    for (std::size_t c = 0; c < prep_.literals.size(); ++c) {
      const auto& lits = prep_.literals[c];
      const bool satisfied =
          std::any_of(lits.begin(), lits.end(), [&](const Literal& lit) {
            return bits[lit.var] == lit.positive;
          });
      if (satisfied) continue;
      e.cost += prep_.weight[c];
      if (lits.size() == 1) ++e.unit_disagreements;
    }
    return e;
  }

  bool better(const Incumbent& a, const Incumbent& b) const {
    if (a.cost < b.cost - eps_) return true;
    if (a.cost > b.cost + eps_) return false;
    if (a.disagreements != b.disagreements) {
      return a.disagreements < b.disagreements;
    }
    return a.bits < b.bits;
  }

  // Belief labels improved by greedy single flips.
  Incumbent seed_incumbent() const {
    Incumbent current = score(prep_.preferred_bits());
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t v = 0; v < prep_.n; ++v) {
        auto bits = current.bits;
        bits[v] = !bits[v];
        Incumbent candidate = score(bits);
        if (better(candidate, current)) {
          current = std::move(candidate);
          improved = true;
        }
      }
    }
    return current;
  }

  void assign(std::uint32_t v, bool val) {
    assigned_[v] = true;
    value_[v] = val;
    disagreements_ += prep_.unit_count[!val][v];
    for (const auto& occ : prep_.occurrences[v]) {
      const std::uint32_t c = occ.clause;
      const double w = prep_.weight[c];
      const auto size = static_cast<std::uint32_t>(prep_.literals[c].size());
      if (occ.positive == val) {
        if (++sat_[c] == 1 && false_[c] == size - 1) {
          pending_[!occ.positive][v] -= w;
        }
        continue;
      }
      ++false_[c];
      if (sat_[c] != 0) continue;
      if (false_[c] == size) {
        pending_[val][v] -= w;
        falsified_ += w;
      } else if (false_[c] == size - 1) {
        const Literal& open = unassigned_literal(c);
        pending_[!open.positive][open.var] += w;
      }
    }
  }

  void unassign(std::uint32_t v) {
    const bool val = value_[v];
    for (const auto& occ : prep_.occurrences[v]) {
      const std::uint32_t c = occ.clause;
      const double w = prep_.weight[c];
      const auto size = static_cast<std::uint32_t>(prep_.literals[c].size());
      if (occ.positive == val) {
        if (--sat_[c] == 0 && false_[c] == size - 1) {
          pending_[!occ.positive][v] += w;
        }
        continue;
      }
      if (sat_[c] == 0) {
        if (false_[c] == size) {
          falsified_ -= w;
          pending_[val][v] += w;
        } else if (false_[c] == size - 1) {
          const Literal& open = unassigned_literal(c);
          pending_[!open.positive][open.var] -= w;
        }
      }
      --false_[c];
    }
    assigned_[v] = false;
    disagreements_ -= prep_.unit_count[!val][v];
  }

  const Literal& unassigned_literal(std::uint32_t c) const {
    for (const auto& lit : prep_.literals[c]) {
      if (!assigned_[lit.var]) return lit;
    }
    return prep_.literals[c].front();  // unreachable
  }

  // Falsified weight plus, per open variable, the cheaper of the clauses
  // each of its values would falsify on its own. Those clause sets are
  // disjoint across variables, so the bound is admissible.
  double lower_bound(std::size_t depth) const {
    double lb = falsified_;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      const auto v = order_[i];
      lb += std::min(pending_[0][v], pending_[1][v]);
    }
    return lb;
  }

  void search(std::size_t depth) {
    const double lb = lower_bound(depth);
    if (lb > best_.cost + eps_) return;
    if (lb >= best_.cost - eps_ && disagreements_ > best_.disagreements) return;

    if (depth == order_.size()) {
      Incumbent leaf = score(value_);
      if (better(leaf, best_)) best_ = std::move(leaf);
      return;
    }

    const std::uint32_t v = order_[depth];
    // Cheaper value first; ties go to the belief label.
    bool first = prep_.preferred(v);
    if (pending_[first][v] > pending_[!first][v] + eps_) first = !first;
    for (bool val : {first, !first}) {
      // Skip a value whose immediate penalty already exceeds the incumbent.
      if (lb - std::min(pending_[0][v], pending_[1][v]) + pending_[val][v] >
          best_.cost + eps_) {
        continue;
      }
      assign(v, val);
      search(depth + 1);
      unassign(v);
    }
  }

  const Prepared& prep_;
  double eps_;
  std::vector<std::uint32_t> order_;
  std::vector<bool> assigned_;
  std::vector<bool> value_;
  std::vector<std::uint32_t> sat_;
  std::vector<std::uint32_t> false_;
  std::vector<double> pending_[2];  // [value][var]: weight falsified by value
  double falsified_ = 0.0;
  std::size_t disagreements_ = 0;
  Incumbent best_;
};

}  // namespace

Assignment solve_exact(const MaxSatProblem& problem,
                       const ExactOptions& options) {
  problem.validate();
  if (problem.variables.size() > options.variable_cap) {
    throw SizingError(problem.variables.size(), options.variable_cap);
  }
  const Prepared prep(problem);
  BranchAndBound bnb(prep);
  const Incumbent best = bnb.run();
  Assignment a = make_assignment(problem, best.bits);
  a.optimal = true;
  return a;
}

namespace {

class WalkSat {
 public:
  WalkSat(const Prepared& prep, std::uint64_t seed, double noise)
      : prep_(prep),
        rng_(seed),
        noise_(noise),
        bits_(prep.preferred_bits()),
        true_count_(prep.weight.size(), 0),
        position_(prep.weight.size(), kAbsent) {
    for (std::size_t c = 0; c < prep_.literals.size(); ++c) {
      for (const auto& lit : prep_.literals[c]) {
        if (bits_[lit.var] == lit.positive) ++true_count_[c];
      }
      if (true_count_[c] == 0) {
        add_falsified(static_cast<std::uint32_t>(c));
        cost_ += prep_.weight[c];
      }
    }
  }

  std::vector<bool> run(std::uint64_t budget) {
    std::vector<bool> best = bits_;
    double best_cost = cost_;
    for (std::uint64_t step = 0; step < budget && !falsified_.empty(); ++step) {
      const std::uint32_t c = falsified_[rng_.below(falsified_.size())];
      const auto& lits = prep_.literals[c];
      std::uint32_t pick = 0;
      if (rng_.bernoulli(noise_)) {
        pick = lits[rng_.below(lits.size())].var;
      } else {
        double best_delta = 0.0;
        std::size_t ties = 0;
        for (const auto& lit : lits) {
          const double d = delta(lit.var);
          if (ties == 0 || d < best_delta) {
            best_delta = d;
            pick = lit.var;
            ties = 1;
          } else if (d == best_delta && rng_.below(++ties) == 0) {
            pick = lit.var;
          }
        }
      }
      flip(pick);
      if (cost_ < best_cost) {
        best_cost = cost_;
        best = bits_;
      }
    }
    return best;
  }

 private:
  static constexpr std::uint32_t kAbsent = ~0u;

  // Cost change if `v` were flipped.
  double delta(std::uint32_t v) const {
    double d = 0.0;
    for (const auto& occ : prep_.occurrences[v]) {
      const auto c = occ.clause;
      if (true_count_[c] == 0) {
        d -= prep_.weight[c];
      } else if (true_count_[c] == 1 && bits_[v] == occ.positive) {
        d += prep_.weight[c];
      }
    }
    return d;
  }

  void flip(std::uint32_t v) {
    bits_[v] = !bits_[v];
    for (const auto& occ : prep_.occurrences[v]) {
      const auto c = occ.clause;
      if (bits_[v] == occ.positive) {
        if (true_count_[c]++ == 0) {
          remove_falsified(c);
          cost_ -= prep_.weight[c];
        }
      } else if (--true_count_[c] == 0) {
        add_falsified(c);
        cost_ += prep_.weight[c];
      }
    }
  }

  void add_falsified(std::uint32_t c) {
    position_[c] = static_cast<std::uint32_t>(falsified_.size());
    falsified_.push_back(c);
  }

  void remove_falsified(std::uint32_t c) {
    const std::uint32_t pos = position_[c];
    const std::uint32_t last = falsified_.back();
    falsified_[pos] = last;
    position_[last] = pos;
    falsified_.pop_back();
    position_[c] = kAbsent;
  }

  const Prepared& prep_;
  Rng rng_;
  double noise_;
  std::vector<bool> bits_;
  std::vector<std::uint32_t> true_count_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> falsified_;
  double cost_ = 0.0;
};

}  // namespace

Assignment solve_local(const MaxSatProblem& problem, std::uint64_t seed,
                       std::uint64_t budget, const LocalSearchOptions& options) {
  if (budget == 0) {
    throw ConfigError("local search needs a positive flip budget");
  }
  if (!(options.noise >= 0.0 && options.noise <= 1.0)) {
    throw ConfigError("local search noise must lie in [0,1]");
  }
  problem.validate();
  const Prepared prep(problem);
  WalkSat walk(prep, seed, options.noise);
  Assignment a = make_assignment(problem, walk.run(budget));
  a.optimal = false;
  return a;
}

std::vector<Flip> apply_assignment(BeliefBank& bank,
                                   const Assignment& assignment) {
  std::vector<Flip> flips;
  for (const auto& [key, belief] : bank) {
    const auto it = assignment.values.find(key);
    if (it == assignment.values.end()) {
      throw StructuralError("assignment misses bank statement " +
                            to_string(key));
    }
    if (it->second != belief.label) {
      flips.push_back({key, belief.label, it->second});
    }
  }
  for (const auto& flip : flips) {
    Belief updated = *bank.find(flip.key);
    updated.label = flip.to;
    updated.provenance = Provenance::Solver;
    bank.upsert(std::move(updated));
  }
  return flips;
}

void write_wcnf(std::ostream& out, const MaxSatProblem& problem) {
  double soft = 0.0;
  for (const auto& c : problem.clauses) {
    if (!c.is_hard()) soft += c.weight;
  }
  char buf[64];
  const auto number = [&](double w) {
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return std::string(buf);
  };
  const std::string top = number(soft + 1.0);
  out << "c beliefbank weighted CNF, lambda " << number(problem.lambda) << '\n';
  for (std::size_t i = 0; i < problem.variables.size(); ++i) {
    out << "c var " << i + 1 << ' ' << to_string(problem.variables[i]) << '\n';
  }
  out << "p wcnf " << problem.variables.size() << ' ' << problem.clauses.size()
      << ' ' << top << '\n';
  for (const auto& c : problem.clauses) {
    out << (c.is_hard() ? top : number(c.weight));
    for (const auto& lit : c.literals) {
      const long idx = static_cast<long>(lit.var) + 1;
      out << ' ' << (lit.positive ? idx : -idx);
    }
    out << " 0\n";
  }
}

}  // namespace beliefbank
