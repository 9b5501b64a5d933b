#include "flood/colorset_path.hpp"

#include <algorithm>
#include <string>

#include "flood/errors.hpp"

namespace flood {

void ColorSetPath::validate() const {
  if (k < 1) throw InputError("color-set path needs k >= 1");
  if (sets.empty()) throw InputError("color-set path is empty");
  if (!provenance.empty() && provenance.size() != sets.size()) {
    throw InputError("provenance length differs from path length");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw InputError("position " + std::to_string(i) + " has no colors");
    for (Color c : sets[i]) {
      if (c < 1 || c > k) {
        throw InputError("position " + std::to_string(i) + " holds color " + std::to_string(c) +
                         " outside 1.." + std::to_string(k));
      }
    }
  }
}

ColorSetPath ColorSetPath::reversed() const {
  ColorSetPath r = *this;
  std::reverse(r.sets.begin(), r.sets.end());
  std::reverse(r.provenance.begin(), r.provenance.end());
  return r;
}

std::vector<Color> colors_of(const ColoredGraph& g, const std::vector<Vertex>& vertices) {
  std::vector<Color> out;
  for (Vertex v : vertices) out.push_back(g.color(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace flood
