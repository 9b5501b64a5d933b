#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

/// A coloring operation: recolor the blob containing `vertex` to `color`.
struct Move {
  Vertex vertex = 0;
  Color color = 1;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Free game: any vertex may be moved. Fixed game: every move uses the pivot.
struct Variant {
  enum class Mode { free, fixed };

  Mode mode = Mode::free;
  std::optional<Vertex> pivot;

  static Variant free_game() { return {}; }
  static Variant fixed_game(Vertex pivot) { return {Mode::fixed, pivot}; }

  bool is_fixed() const { return mode == Mode::fixed; }

  /// Throws InputError if the pivot is missing, superfluous or out of range.
  void validate(const ColoredGraph& g) const;

  friend bool operator==(const Variant&, const Variant&) = default;
};

const char* to_string(Variant::Mode mode);

/// An optimal (or claimed optimal) solution: its length and the moves.
struct Solution {
  int opt = 0;
  std::vector<Move> witness;
};

/// Immutable game position: the board, its current coloring, the blob
/// partition (maximal monochromatic connected sets) and the move history.
///
/// Blob ids are canonical: blob b is the b-th blob when blobs are ordered by
/// their smallest vertex.
class GameState {
 public:
  explicit GameState(std::shared_ptr<const ColoredGraph> graph);
  explicit GameState(const ColoredGraph& graph)
      : GameState(std::make_shared<const ColoredGraph>(graph)) {}

  /// Replays `moves` from the initial coloring; throws on the first illegal move.
  static GameState replay(std::shared_ptr<const ColoredGraph> graph, std::span<const Move> moves,
                          const Variant& variant = {});

  const ColoredGraph& graph() const { return *graph_; }
  const std::shared_ptr<const ColoredGraph>& graph_ptr() const { return graph_; }

  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

  int blob_of(Vertex v) const { return blob_of_[v]; }
  int blob_count() const { return blob_count_; }
  Color blob_color(int blob) const { return colors_[blob_rep_[blob]]; }
  /// Smallest vertex of the blob.
  Vertex blob_representative(int blob) const { return blob_rep_[blob]; }
  std::vector<std::vector<Vertex>> blobs() const;

  const std::vector<Move>& history() const { return history_; }

  bool monochrome() const { return blob_count_ == 1; }
  int distinct_colors() const;

  /// Recolors the blob of m.vertex to m.color and merges it with adjacent
  /// blobs of that color. Throws InputError on an unknown vertex or color and
  /// VariantViolation when the variant forbids the vertex.
  GameState apply(const Move& m, const Variant& variant = {}) const;

  /// The coloring as a fresh board (history is dropped).
  ColoredGraph current_graph() const { return graph_->recolored(colors_); }

 private:
  GameState(std::shared_ptr<const ColoredGraph> graph, std::vector<Color> colors,
            std::vector<Move> history);
  void rebuild_blobs();

  std::shared_ptr<const ColoredGraph> graph_;
  std::vector<Color> colors_;
  std::vector<int> blob_of_;
  std::vector<Vertex> blob_rep_;
  int blob_count_ = 0;
  std::vector<Move> history_;
};

/// N_c(v) on the current coloring. If col(v) = c this is v's component in
/// G[V_c]; otherwise it is the union of the color-c components touching v's
/// blob (the set a move (v, c) absorbs), empty when there is none.
std::vector<Vertex> flood_neighborhood(const GameState& state, Vertex v, Color c);

inline GameState apply_move(const GameState& state, const Move& m, const Variant& variant = {}) {
  return state.apply(m, variant);
}

struct VerifyResult {
  bool valid = false;
  std::optional<Color> final_color;
  int length = 0;
  /// Index of the first offending move, or length when the replay simply
  /// does not end monochrome.
  std::optional<int> first_violation;
  std::string reason;
};

VerifyResult verify_solution(const ColoredGraph& g, const Variant& variant,
                             std::span<const Move> moves);

/// Blob quotient: one vertex per blob (in canonical blob order) colored by
/// the blob color, adjacent when the blobs touch.
struct Contraction {
  ColoredGraph quotient;
  std::vector<int> vertex_to_quotient;
};

Contraction contract(const GameState& state);
inline Contraction contract(const ColoredGraph& g) { return contract(GameState(g)); }

/// lower = distinct colors - 1, upper = blobs - 1.
struct Bounds {
  int lower = 0;
  int upper = 0;
};

Bounds bounds(const ColoredGraph& g);
Bounds bounds(const GameState& state);

}  // namespace flood
