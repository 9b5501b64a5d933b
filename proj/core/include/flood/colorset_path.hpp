#pragma once

#include <vector>

#include "flood/graph.hpp"

namespace flood {

/// Sequence of nonempty color sets, the substrate of the interval DP.
/// provenance[i] lists the vertices whose colors make up sets[i]; it may be
/// empty for abstract paths built by hand.
struct ColorSetPath {
  int k = 0;
  std::vector<std::vector<Color>> sets;
  std::vector<std::vector<Vertex>> provenance;

  int size() const { return static_cast<int>(sets.size()); }

  /// Throws InputError on empty sets, colors outside 1..k or a provenance
  /// list of the wrong length.
  void validate() const;

  ColorSetPath reversed() const;

  friend bool operator==(const ColorSetPath&, const ColorSetPath&) = default;
};

/// Sorted distinct colors of `vertices` in g.
std::vector<Color> colors_of(const ColoredGraph& g, const std::vector<Vertex>& vertices);

}  // namespace flood
