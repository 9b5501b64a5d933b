#pragma once

#include <optional>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

/// Lexicographic breadth-first search order starting at vertex 0.
std::vector<Vertex> lex_bfs(const AdjacencyList& adj);

/// A perfect elimination ordering (reverse LexBFS) if the graph is chordal.
std::optional<std::vector<Vertex>> perfect_elimination_order(const AdjacencyList& adj);

bool is_chordal(const AdjacencyList& adj);

/// Maximal cliques of a chordal graph, each sorted, the list sorted
/// lexicographically. Throws RecognitionError (chordless cycle) otherwise.
std::vector<std::vector<Vertex>> maximal_cliques(const AdjacencyList& adj);

/// Brute-force forbidden structure finders; each returns the vertices in a
/// documented order or nothing.
/// Cycle of length >= 4 without chords, in cyclic order.
std::optional<std::vector<Vertex>> find_chordless_cycle(const AdjacencyList& adj);
/// Three independent vertices, each pair joined by a path avoiding the
/// closed neighborhood of the third.
std::optional<std::vector<Vertex>> find_asteroidal_triple(const AdjacencyList& adj);
/// Induced K_{1,3}: center first, then the three leaves.
std::optional<std::vector<Vertex>> find_claw(const AdjacencyList& adj);

}  // namespace flood
