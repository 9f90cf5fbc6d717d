#pragma once

#include <cstdint>

#include "evo/core/errors.hpp"
#include "evo/core/problem.hpp"
#include "evo/core/rng.hpp"

namespace evo {

/// Runs `search(evaluator, rng)` until it returns or the budget runs out, and
/// turns the evaluator state into a RunRecord.
template <typename Search>
RunRecord run_search(const Problem& problem, std::uint64_t seed, std::uint64_t max_calls,
                     Search&& search) {
  Evaluator ev(problem, max_calls);
  RngStream rng(seed);
  try {
    search(ev, rng);
  } catch (const BudgetExhausted&) {
  }
  return ev.record(seed);
}

}  // namespace evo
