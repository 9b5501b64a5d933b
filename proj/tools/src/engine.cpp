#include "flood_tools/engine.hpp"

#include "flood/errors.hpp"
#include "flood/mpq.hpp"
#include "flood/split.hpp"

namespace flood::tools {

const char* to_string(Engine engine) {
  switch (engine) {
    case Engine::automatic:
      return "auto";
    case Engine::oracle:
      return "oracle";
    case Engine::interval:
      return "interval";
    case Engine::split:
      return "split";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  for (auto e : {Engine::automatic, Engine::oracle, Engine::interval, Engine::split}) {
    if (name == to_string(e)) return e;
  }
  throw InputError("unknown engine '" + std::string(name) + "' (auto, oracle, interval, split)");
}

EngineResult run_engine(const ColoredGraph& g, const Variant& variant, Engine engine,
                        const SearchBudget& budget) {
  variant.validate(g);
  if (variant.is_fixed() && engine != Engine::automatic && engine != Engine::oracle) {
    throw InputError(std::string("engine ") + to_string(engine) + " solves the free game only");
  }
  if (engine == Engine::automatic) {
    if (variant.is_fixed()) {
      engine = Engine::oracle;
    } else if (is_split(g.adjacency())) {
      engine = Engine::split;
    } else if (is_interval(g.adjacency())) {
      engine = Engine::interval;
    } else {
      engine = Engine::oracle;
    }
  }
  EngineResult r;
  r.engine = to_string(engine);
  switch (engine) {
    case Engine::split:
      r.solution = solve_split(g, budget, &r.warnings);
      break;
    case Engine::interval:
      r.solution = solve_interval(g);
      break;
    default:
      r.solution = solve_exact(g, variant, budget);
      break;
  }
  return r;
}

}  // namespace flood::tools
