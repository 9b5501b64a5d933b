#include "json_io.hpp"

#include <algorithm>

#include "flood/errors.hpp"

namespace flood::tools {

std::vector<Move> parse_moves(const json& j) {
  if (!j.is_array()) throw ParseError("moves", "expected an array");
  std::vector<Move> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& m = j[i];
    const std::string field = "moves[" + std::to_string(i) + "]";
    json v;
    json c;
    if (m.is_object() && m.contains("vertex") && m.contains("color")) {
      v = m["vertex"];
      c = m["color"];
    } else if (m.is_array() && m.size() == 2) {
      v = m[0];
      c = m[1];
    } else {
      throw ParseError(field, "expected {\"vertex\": v, \"color\": c}");
    }
    if (!v.is_number_integer() || !c.is_number_integer()) throw ParseError(field, "expected integers");
    out.push_back({v.get<int>(), c.get<int>()});
  }
  return out;
}

json document_json(const InstanceDocument& doc) { return json::parse(emit_instance(doc)); }

json state_json(const GameState& state) {
  const ColoredGraph& g = state.graph();
  json s;
  s["move_count"] = state.history().size();
  s["distinct_colors"] = state.distinct_colors();
  const Bounds b = bounds(state);
  s["lower_bound"] = b.lower;
  s["upper_bound"] = b.upper;
  s["monochrome"] = state.monochrome();
  s["colors"] = state.colors();
  json blobs = json::array();
  const auto members = state.blobs();
  for (int i = 0; i < state.blob_count(); ++i) {
    blobs.push_back({{"id", i}, {"color", state.blob_color(i)}, {"vertices", members[i]}});
  }
  s["blobs"] = blobs;
  std::vector<std::pair<int, int>> adj;
  for (const auto& [u, v] : g.edges()) {
    int a = state.blob_of(u);
    int c = state.blob_of(v);
    if (a != c) adj.emplace_back(std::min(a, c), std::max(a, c));
  }
  std::sort(adj.begin(), adj.end());
  adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  s["blob_edges"] = json::array();
  for (const auto& [a, c] : adj) s["blob_edges"].push_back({a, c});
  s["history"] = moves_json(state.history());
  return s;
}

}  // namespace flood::tools
