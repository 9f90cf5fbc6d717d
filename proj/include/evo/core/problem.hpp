#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "evo/core/types.hpp"

namespace evo {

/// Objective-function contract. All problems are minimized.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual const Bounds& bounds() const = 0;
  virtual const Encoding& encoding() const = 0;

  /// Raw objective on an already-encoded vector of length dimension().
  virtual double objective(std::span<const double> x) const = 0;

  /// Success predicate on an objective value.
  virtual bool is_success(double value) const = 0;
};

/// Tracks calls against a fixed cap. calls_used never decreases.
class EvaluationBudget {
 public:
  explicit EvaluationBudget(std::uint64_t max_calls, std::uint64_t calls_used = 0)
      : max_calls_(max_calls), calls_used_(calls_used) {}

  std::uint64_t max_calls() const { return max_calls_; }
  std::uint64_t calls_used() const { return calls_used_; }
  std::uint64_t remaining() const { return max_calls_ - calls_used_; }
  bool exhausted() const { return calls_used_ >= max_calls_; }

  /// Throws BudgetExhausted when no calls remain.
  void consume();

 private:
  std::uint64_t max_calls_;
  std::uint64_t calls_used_;
};

/// One counted objective call: checks the dimension, snaps grid-encoded
/// genes, evaluates and charges the budget.
double evaluate(const Problem& problem, const Chromosome& c, EvaluationBudget& budget);

/// Outcome of one optimization trial.
struct RunRecord {
  std::uint64_t seed = 0;
  bool success = false;
  std::optional<std::uint64_t> calls_at_success;
  std::uint64_t calls_used = 0;
  double best_value = 0.0;
  Chromosome best_chromosome;

  /// Fitness calls charged to this run in reports: calls at success for a
  /// successful run, total calls otherwise.
  std::uint64_t reported_calls() const { return calls_at_success.value_or(calls_used); }
};

/// Per-run evaluation front end used by every algorithm. Records the best
/// point seen and the call count at which the success predicate first held.
class Evaluator {
 public:
  Evaluator(const Problem& problem, std::uint64_t max_calls)
      : problem_(problem), budget_(max_calls) {}

  double operator()(const Chromosome& c);

  const Problem& problem() const { return problem_; }
  const EvaluationBudget& budget() const { return budget_; }
  std::uint64_t calls() const { return budget_.calls_used(); }

  bool solved() const { return calls_at_success_.has_value(); }
  std::optional<std::uint64_t> calls_at_success() const { return calls_at_success_; }
  bool has_best() const { return has_best_; }
  double best_value() const { return best_value_; }
  const Chromosome& best_chromosome() const { return best_; }

  RunRecord record(std::uint64_t seed) const;

 private:
  const Problem& problem_;
  EvaluationBudget budget_;
  std::optional<std::uint64_t> calls_at_success_;
  bool has_best_ = false;
  double best_value_ = 0.0;
  Chromosome best_;
};

}  // namespace evo
