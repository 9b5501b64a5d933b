#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flood {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (unknown vertex, color outside 1..k, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A move that the active variant forbids (fixed game, non-pivot vertex).
class VariantViolation : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (e.g. a reduction on an edgeless graph).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds a hard capacity limit of the algorithm.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of states, depth or time before proving optimality.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, int best_lower_bound)
      : Error(what), best_lower_bound_(best_lower_bound) {}

  /// Largest lower bound on the optimum established before the budget ran out.
  int best_lower_bound() const noexcept { return best_lower_bound_; }

 private:
  int best_lower_bound_;
};

/// Forbidden induced structure proving that a graph is outside a class.
struct ForbiddenStructure {
  enum class Kind { chordless_cycle, asteroidal_triple, claw, not_split };
  Kind kind;
  std::vector<int> vertices;

  std::string describe() const;
};

const char* to_string(ForbiddenStructure::Kind kind);

/// Graph class recognition failed; carries a witness when one was requested.
class RecognitionError : public Error {
 public:
  RecognitionError(const std::string& what, std::optional<ForbiddenStructure> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::optional<ForbiddenStructure>& witness() const noexcept { return witness_; }

 private:
  std::optional<ForbiddenStructure> witness_;
};

/// The DP optimum could not be turned into a move sequence of the same length.
class WitnessGap : public Error {
 public:
  WitnessGap(const std::string& what, int dp_opt) : Error(what), dp_opt_(dp_opt) {}

  int dp_opt() const noexcept { return dp_opt_; }

 private:
  int dp_opt_;
};

}  // namespace flood
