#pragma once

#include <chrono>
#include <cstdint>

#include "flood/game.hpp"

namespace flood {

/// Limits for exhaustive search. Exceeding any of them raises BudgetExceeded.
struct SearchBudget {
  std::int64_t max_states = 20'000'000;
  int max_depth = 64;
  std::chrono::milliseconds time_limit{120'000};

  /// Throws InputError unless every limit is positive.
  void validate() const;
};

/// Minimum number of moves to make g monochrome under `variant`, with a
/// witness. Breadth-first over contracted colorings, so the first goal is optimal.
Solution solve_exact(const ColoredGraph& g, const Variant& variant = {},
                     const SearchBudget& budget = {});

struct Hint {
  Move move;
  int remaining_opt = 0;
  /// False when the budget ran out and `move` only minimizes the successor's
  /// lower bound; remaining_opt is then the best lower bound proven.
  bool optimal = true;
};

/// First move of an optimal continuation from `state`. Among optimal first
/// moves the least (blob in canonical order, color) pair wins; the move names
/// the blob by its smallest vertex. Throws DomainError on a monochrome state.
Hint hint(const GameState& state, const Variant& variant = {}, const SearchBudget& budget = {});

}  // namespace flood
