#include <algorithm>

#include "flood/errors.hpp"
#include "flood/intervaldp.hpp"
#include "flood/mpq.hpp"

namespace flood {

Solution solve_interval(const ColoredGraph& g, ProjectionMode mode) {
  MpqTree t = build_mpq(g);
  auto proj = root_projection(t, g, mode);
  if (const auto* u = std::get_if<UniversalCase>(&proj)) {
    Solution s;
    s.opt = u->distinct_colors - 1;
    std::vector<Color> present = g.colors();
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    for (Color c : present) {
      if (c != g.color(u->root_vertex)) s.witness.push_back({u->root_vertex, c});
    }
    return s;
  }
  const int opt = dp_value(std::get<ColorSetPath>(proj));
  ColorSetPath path = clique_path(t, g);
  DpResult dp = dp_solve(path);
  if (dp.opt != opt) {
    throw WitnessGap("root projection gives " + std::to_string(opt) + " but the clique path gives " +
                         std::to_string(dp.opt),
                     opt);
  }
  return {opt, reconstruct_witness(dp, path, g)};
}

}  // namespace flood
