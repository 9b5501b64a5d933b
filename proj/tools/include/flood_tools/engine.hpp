#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flood/game.hpp"
#include "flood/oracle.hpp"

namespace flood::tools {

enum class Engine { automatic, oracle, interval, split };

const char* to_string(Engine engine);
/// "auto", "oracle", "interval" or "split"; throws InputError otherwise.
Engine parse_engine(std::string_view name);

struct EngineResult {
  Solution solution;
  /// Engine that produced the answer ("oracle", "interval", "split").
  std::string engine;
  std::vector<std::string> warnings;
};

/// Picks split, then interval, then oracle under `automatic`. The interval and
/// split engines solve the free game only; a fixed variant always goes to the
/// oracle, and forcing another engine on it is an InputError.
EngineResult run_engine(const ColoredGraph& g, const Variant& variant, Engine engine,
                        const SearchBudget& budget = {});

}  // namespace flood::tools
