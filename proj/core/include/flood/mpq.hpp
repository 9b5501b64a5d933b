#pragma once

#include <string>
#include <variant>
#include <vector>

#include "flood/colorset_path.hpp"
#include "flood/game.hpp"

namespace flood {

/// Modified PQ-tree of an interval graph. Leaves are the maximal cliques;
/// P-nodes and leaves store a vertex set, Q-nodes an ordered list of
/// sections with one child per section.
struct MpqNode {
  enum class Kind { leaf, p, q };
  Kind kind = Kind::leaf;
  /// Leaf and P-node vertex set, sorted.
  std::vector<Vertex> vertices;
  /// Q-node sections, each sorted; sections.size() == children.size().
  std::vector<std::vector<Vertex>> sections;
  std::vector<int> children;
  /// Leaf only: index into MpqTree::cliques.
  int clique = -1;
};

const char* to_string(MpqNode::Kind kind);

struct MpqTree {
  std::vector<MpqNode> nodes;
  int root = 0;
  int vertex_count = 0;
  /// Maximal cliques, each sorted, in lexicographic order.
  std::vector<std::vector<Vertex>> cliques;

  /// Leaf clique indices left to right: a consecutive clique arrangement.
  std::vector<int> frontier() const;

  /// Vertices stored at the root (the root's set, or the union of its sections).
  std::vector<Vertex> root_vertices() const;
};

/// Builds the tree of a connected interval graph. Throws RecognitionError with
/// a chordless cycle or asteroidal triple witness otherwise.
MpqTree build_mpq(const AdjacencyList& adj);
inline MpqTree build_mpq(const ColoredGraph& g) { return build_mpq(g.adjacency()); }

bool is_interval(const AdjacencyList& adj);

/// Structural checks against the source graph; returns a description of the
/// first violation, or an empty string.
std::string check_invariants(const MpqTree& t, const AdjacencyList& adj);

/// Interval [first, last] over frontier positions for every vertex; two
/// intervals meet iff the vertices are adjacent.
std::vector<std::pair<int, int>> realize_intervals(const MpqTree& t);

/// Indented text dump: one line per node with kind and vertex sets.
std::string to_text(const MpqTree& t);

/// Sampled color-set path over the clique arrangement: clique color sets
/// interleaved with the color sets of consecutive clique intersections.
ColorSetPath clique_path(const MpqTree& t, const ColoredGraph& g);

struct UniversalCase {
  /// Number of distinct colors in the whole graph.
  int distinct_colors = 0;
  /// A vertex stored at the root (adjacent to every other vertex).
  Vertex root_vertex = 0;
};

enum class ProjectionMode {
  /// Section color sets (with subtree colors) interleaved with the colors of
  /// consecutive section intersections.
  separated,
  /// Section color sets (with subtree colors) only.
  sections_only,
};

/// Projects a Q-node root onto a color-set path; P-node or leaf roots give a
/// UniversalCase. Provenance entries are section indices.
std::variant<ColorSetPath, UniversalCase> root_projection(
    const MpqTree& t, const ColoredGraph& g, ProjectionMode mode = ProjectionMode::separated);

}  // namespace flood

namespace flood {

/// Free-game optimum of a connected interval graph. A P-node or leaf root
/// gives d - 1 (one root vertex recolored through the remaining colors);
/// a Q-node root runs the DP on the root projection. The witness is replayed
/// on the clique path; WitnessGap when its optimum disagrees.
Solution solve_interval(const ColoredGraph& g, ProjectionMode mode = ProjectionMode::separated);

}  // namespace flood
