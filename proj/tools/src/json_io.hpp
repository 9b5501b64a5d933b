#pragma once

#include <json.hpp>

#include "flood/game.hpp"
#include "flood/instances.hpp"

namespace flood::tools {

using json = nlohmann::ordered_json;

inline json move_json(const Move& m) { return {{"vertex", m.vertex}, {"color", m.color}}; }

inline json moves_json(const std::vector<Move>& moves) {
  json a = json::array();
  for (const Move& m : moves) a.push_back(move_json(m));
  return a;
}

/// Accepts [{"vertex": v, "color": c}, ...] or [[v, c], ...].
std::vector<Move> parse_moves(const json& j);

json document_json(const InstanceDocument& doc);

json state_json(const GameState& state);

}  // namespace flood::tools
