#pragma once

#include <string>
#include <vector>

#include "flood/game.hpp"
#include "flood/oracle.hpp"

namespace flood {

/// Partition of V into a clique and an independent set.
struct SplitDecomposition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;

  friend bool operator==(const SplitDecomposition&, const SplitDecomposition&) = default;
};

/// Degree-sequence recognition. Returns the decomposition with the largest
/// clique; among those the lexicographically smallest clique. Throws
/// RecognitionError (not_split, with an induced 2K2, C4 or C5 when n <= 40).
SplitDecomposition recognize_split(const AdjacencyList& adj);
inline SplitDecomposition recognize_split(const ColoredGraph& g) {
  return recognize_split(g.adjacency());
}

bool is_split(const AdjacencyList& adj);

/// Free-game optimum of a connected split graph by breadth-first search over
/// clique colorings and absorbed independent twin classes, moving clique
/// vertices only. Appends a note to `warnings` when k >= 8.
Solution solve_split(const ColoredGraph& g, const SearchBudget& budget = {},
                     std::vector<std::string>* warnings = nullptr);

}  // namespace flood
