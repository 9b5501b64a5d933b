#pragma once

#include <map>
#include <string>
#include <vector>

#include "flood/game.hpp"
#include "flood/intervaldp.hpp"

namespace flood {

/// Uncolored simple graph for Vertex Cover.
struct VcInstance {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
  /// Throws InputError on loops, repeated edges or bad ids.
  void validate() const;
};

struct ReductionCertificate {
  /// 3m for the caterpillar, m^2 for the proper interval construction.
  int offset = 0;
  std::map<Color, std::string> color_legend;
  /// Role of each produced vertex, e.g. "b3/e1" or "w2/e0/left".
  std::vector<std::string> vertex_legend;
  /// Source edges in gadget order.
  std::vector<Edge> edge_order;
};

template <class Output>
struct Reduction {
  Output instance;
  ReductionCertificate certificate;
};

/// One six-vertex backbone gadget per edge, consecutive gadgets sharing their
/// b-colored end. Colors: b = 1, e = 2, source vertex u -> u + 3.
/// Throws DomainError when the source has no edges or its edges do not form
/// one component (isolated vertices are allowed).
Reduction<ColoredGraph> vc_to_caterpillar(const VcInstance& vc);

/// Backbones, twin intervals J_i, J'_i per edge and two connecting paths of
/// m - 1 vertices per edge sharing the colors w(i, 1..m-1).
/// Colors: b = 1, u -> u + 2, w(i, j) -> n + 2 + i(m - 1) + j - 1.
/// Throws DomainError when m < 2 or the edges are disconnected.
Reduction<IntervalRepresentation> vc_to_proper_interval(const VcInstance& vc);

struct VertexCover {
  int tau = 0;
  std::vector<Vertex> cover;
};

/// Exhaustive search by increasing size; the first cover in lexicographic
/// order wins. Throws BudgetExceeded when n > 20.
VertexCover vc_bruteforce(const VcInstance& vc);

/// Move sequence of length offset + |cover| built from a cover, as in the
/// correctness argument of each construction.
std::vector<Move> caterpillar_moves(const VcInstance& vc, const std::vector<Vertex>& cover);
std::vector<Move> proper_interval_moves(const VcInstance& vc, const std::vector<Vertex>& cover);

}  // namespace flood
