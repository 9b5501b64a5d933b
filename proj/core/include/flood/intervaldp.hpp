#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flood/colorset_path.hpp"
#include "flood/game.hpp"

namespace flood {

/// Integer-endpoint interval model with a color per interval.
struct IntervalRepresentation {
  int k = 0;
  std::vector<std::pair<int, int>> intervals;
  std::vector<Color> colors;

  int vertex_count() const { return static_cast<int>(intervals.size()); }
  /// Largest right endpoint (P).
  int span() const;
  /// Intersection graph edges, (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  /// Intersection graph as a board; throws InputError when disconnected.
  ColoredGraph graph() const;

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;
};

/// Empty string when rep is a compact proper representation: endpoints in
/// [0, P] with 0 used, L <= R, no interval strictly inside another, N[p] and
/// N[p+1] distinct and nonempty for every integer p < P, P <= 2n - 1 and a
/// connected intersection graph. Otherwise the first violation.
std::string proper_compact_violation(const IntervalRepresentation& rep);

bool is_proper_interval(const AdjacencyList& adj);

/// Compact proper representation of g. Vertices are ordered by their clique
/// span; each integer point is either a single endpoint or a left endpoint
/// followed directly by right endpoints. Throws RecognitionError with a
/// chordless cycle, asteroidal triple or claw.
IntervalRepresentation build_representation(const ColoredGraph& g);

/// Samples N[p] at p = 0, 0.5, ..., P: position 2p holds col(N[p]) and
/// 2p + 1 holds col(N[p + 0.5]). Throws InputError on an empty sample.
ColorSetPath build_colorset_path(const IntervalRepresentation& rep);

/// f(l, r, c, S) over compressed colors: only colors present on the path are
/// indexed, S is a bit mask over them.
class DpTable {
 public:
  static constexpr int max_colors = 24;
  /// Tables larger than this raise CapacityError instead of allocating.
  static constexpr std::size_t max_table_bytes = std::size_t{3} << 29;

  DpTable() = default;
  explicit DpTable(const ColorSetPath& path);

  int positions() const { return q_; }
  int color_count() const { return d_; }
  /// Compressed index -> color id.
  const std::vector<Color>& palette() const { return palette_; }
  std::uint32_t mask_at(int i) const { return mask_[i]; }
  /// Colors present in positions l..r.
  std::uint32_t window(int l, int r) const { return win_[offset(l, r)]; }

  /// f(l, r, c, S); zero for an empty range (r < l).
  int f(int l, int r, int c, std::uint32_t s) const {
    if (r < l) return 0;
    const std::size_t o = offset(l, r);
    s &= win_[o] & ~(std::uint32_t{1} << c);
    return rec_[o * stride_ + ((static_cast<std::size_t>(c) << d_) | s)];
  }

  /// min over c' != c of f(l, r, c', t).
  int best_other(int l, int r, std::uint32_t t, int c) const;

 private:
  friend void fill_table(DpTable&);
  std::size_t offset(int l, int r) const { return row_[l] + static_cast<std::size_t>(r - l); }

  int q_ = 0;
  int d_ = 0;
  std::vector<Color> palette_;
  std::vector<std::uint32_t> mask_;
  std::vector<std::size_t> row_;
  std::vector<std::uint32_t> win_;
  /// One record per pair: f for every color, then best, best color and
  /// second best per mask, each 2^d entries.
  std::size_t stride_ = 0;
  std::vector<std::uint16_t> rec_;
};

struct DpResult {
  int opt = 0;
  DpTable table;
  /// Backbone color (compressed index) and leftover mask achieving opt.
  int best_color = 0;
  std::uint32_t best_set = 0;
};

/// min over c, S of f(0, q, c, S) + |S|. Throws CapacityError when more than
/// DpTable::max_colors colors are present.
DpResult dp_solve(const ColorSetPath& path);

/// Optimum only, without keeping the table.
int dp_value(const ColorSetPath& path);

/// Replays the recurrence choices on the board and returns the moves.
/// path.provenance must name the vertices of every position. Throws
/// WitnessGap when the moves do not flood g in exactly opt moves.
std::vector<Move> reconstruct_witness(const DpResult& dp, const ColorSetPath& path,
                                      const ColoredGraph& g);

/// Same path structure, sets recomputed from the provenance under `colors`.
ColorSetPath recolor_path(const ColorSetPath& path, const std::vector<Color>& colors);

/// Free-game optimum and witness for a proper interval graph.
Solution solve_proper_interval(const ColoredGraph& g);

}  // namespace flood
