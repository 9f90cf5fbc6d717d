#include "evo/core/problem.hpp"

#include <cmath>

#include "evo/core/errors.hpp"

namespace evo {

void EvaluationBudget::consume() {
  if (exhausted()) throw BudgetExhausted();
  ++calls_used_;
}

double evaluate(const Problem& problem, const Chromosome& c, EvaluationBudget& budget) {
  if (c.size() != problem.dimension()) throw DimensionMismatch(problem.dimension(), c.size());
  if (budget.exhausted()) throw BudgetExhausted();
  double value;
  if (problem.encoding().is_grid()) {
    const Chromosome snapped = snap_to_grid(c, problem.encoding(), problem.bounds());
    value = problem.objective(snapped.genes());
  } else {
    value = problem.objective(c.genes());
  }
  budget.consume();
  return value;
}

double Evaluator::operator()(const Chromosome& c) {
  const double value = evaluate(problem_, c, budget_);
  if (!has_best_ || value < best_value_) {
    has_best_ = true;
    best_value_ = value;
    best_ = c;
  }
  if (!calls_at_success_ && problem_.is_success(value)) {
    calls_at_success_ = budget_.calls_used();
  }
  return value;
}

RunRecord Evaluator::record(std::uint64_t seed) const {
  RunRecord r;
  r.seed = seed;
  r.success = solved();
  r.calls_at_success = calls_at_success_;
  r.calls_used = budget_.calls_used();
  r.best_value = has_best_ ? best_value_ : std::nan("");
  if (has_best_) {
    r.best_chromosome = problem_.encoding().is_grid()
                            ? snap_to_grid(best_, problem_.encoding(), problem_.bounds())
                            : best_;
  }
  return r;
}

}  // namespace evo
