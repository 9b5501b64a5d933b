#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace flood {

using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;
using AdjacencyList = std::vector<std::vector<Vertex>>;

/// Builds sorted, duplicate-free adjacency lists. Throws InputError on loops,
/// repeated edges or out-of-range endpoints.
AdjacencyList make_adjacency(int n, std::span<const Edge> edges);

bool is_connected(const AdjacencyList& adj);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const AdjacencyList& adj);

/// Sorted-list membership test on an adjacency list.
bool adjacent(const AdjacencyList& adj, Vertex u, Vertex v);

/// Subgraph induced by `keep` (which must be sorted); vertex i of the result is keep[i].
AdjacencyList induced(const AdjacencyList& adj, std::span<const Vertex> keep);

/// The game board: a connected simple graph whose vertices carry colors 1..k.
class ColoredGraph {
 public:
  /// Validates simplicity, connectivity and the color range; throws InputError.
  ColoredGraph(int k, std::vector<Color> colors, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Size of the palette, which may exceed the number of colors in use.
  int k() const { return k_; }

  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const AdjacencyList& adjacency() const { return adj_; }
  /// Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const { return flood::adjacent(adj_, u, v); }

  bool contains_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
  bool contains_color(Color c) const { return c >= 1 && c <= k_; }

  /// Number of distinct colors actually present.
  int distinct_colors() const;
  /// Bit (c-1) is set for every color c present. Requires k <= 32.
  std::uint32_t color_mask() const;

  /// Same graph with another coloring (validated against the same k).
  ColoredGraph recolored(std::vector<Color> colors) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.k_ == b.k_ && a.colors_ == b.colors_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  AdjacencyList adj_;
};

}  // namespace flood
