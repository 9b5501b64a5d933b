#include "flood/game.hpp"

#include <algorithm>

#include "flood/disjoint_set.hpp"
#include "flood/errors.hpp"

namespace flood {

const char* to_string(Variant::Mode mode) {
  return mode == Variant::Mode::fixed ? "fixed" : "free";
}

void Variant::validate(const ColoredGraph& g) const {
  if (mode == Mode::fixed) {
    if (!pivot) throw InputError("fixed variant requires a pivot");
    if (!g.contains_vertex(*pivot)) {
      throw InputError("pivot " + std::to_string(*pivot) + " is not a vertex");
    }
  } else if (pivot) {
    throw InputError("free variant must not name a pivot");
  }
}

GameState::GameState(std::shared_ptr<const ColoredGraph> graph)
    : graph_(std::move(graph)), colors_(graph_->colors()) {
  rebuild_blobs();
}

GameState::GameState(std::shared_ptr<const ColoredGraph> graph, std::vector<Color> colors,
                     std::vector<Move> history)
    : graph_(std::move(graph)), colors_(std::move(colors)), history_(std::move(history)) {}

void GameState::rebuild_blobs() {
  const int n = graph_->vertex_count();
  DisjointSet dsu(n);
  for (const auto& [u, v] : graph_->edges()) {
    if (colors_[u] == colors_[v]) dsu.unite(u, v);
  }
  blob_of_.assign(n, -1);
  blob_rep_.clear();
  std::vector<int> root_label(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    int r = dsu.find(v);
    if (root_label[r] < 0) {
      root_label[r] = static_cast<int>(blob_rep_.size());
      blob_rep_.push_back(v);
    }
    blob_of_[v] = root_label[r];
  }
  blob_count_ = static_cast<int>(blob_rep_.size());
}

GameState GameState::replay(std::shared_ptr<const ColoredGraph> graph, std::span<const Move> moves,
                            const Variant& variant) {
  GameState state(std::move(graph));
  for (const Move& m : moves) state = state.apply(m, variant);
  return state;
}

std::vector<std::vector<Vertex>> GameState::blobs() const {
  std::vector<std::vector<Vertex>> out(blob_count_);
  for (Vertex v = 0; v < static_cast<Vertex>(blob_of_.size()); ++v) out[blob_of_[v]].push_back(v);
  return out;
}

int GameState::distinct_colors() const {
  std::vector<char> seen(graph_->k() + 1, 0);
  int d = 0;
  for (int b = 0; b < blob_count_; ++b) {
    Color c = blob_color(b);
    if (!seen[c]) {
      seen[c] = 1;
      ++d;
    }
  }
  return d;
}

GameState GameState::apply(const Move& m, const Variant& variant) const {
  const ColoredGraph& g = *graph_;
  if (!g.contains_vertex(m.vertex)) {
    throw InputError("move names unknown vertex " + std::to_string(m.vertex));
  }
  if (!g.contains_color(m.color)) {
    throw InputError("move names color " + std::to_string(m.color) + " outside 1.." +
                     std::to_string(g.k()));
  }
  if (variant.is_fixed() && variant.pivot != m.vertex) {
    throw VariantViolation("fixed game allows moves on vertex " +
                           std::to_string(variant.pivot.value_or(-1)) + " only, got " +
                           std::to_string(m.vertex));
  }

  std::vector<Move> history = history_;
  history.push_back(m);
  GameState next(graph_, colors_, std::move(history));

  const int moved = blob_of_[m.vertex];
  const int n = g.vertex_count();
  DisjointSet merge(blob_count_);
  for (Vertex u = 0; u < n; ++u) {
    if (blob_of_[u] != moved) continue;
    next.colors_[u] = m.color;
    for (Vertex w : g.neighbors(u)) {
      if (blob_of_[w] != moved && colors_[w] == m.color) merge.unite(moved, blob_of_[w]);
    }
  }

  // Merged blobs are relabelled so ids stay ordered by smallest vertex.
  next.blob_of_.assign(n, -1);
  std::vector<int> label(blob_count_, -1);
  for (Vertex v = 0; v < n; ++v) {
    int r = merge.find(blob_of_[v]);
    if (label[r] < 0) {
      label[r] = static_cast<int>(next.blob_rep_.size());
      next.blob_rep_.push_back(v);
    }
    next.blob_of_[v] = label[r];
  }
  next.blob_count_ = static_cast<int>(next.blob_rep_.size());
  return next;
}

std::vector<Vertex> flood_neighborhood(const GameState& state, Vertex v, Color c) {
  const ColoredGraph& g = state.graph();
  if (!g.contains_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (!g.contains_color(c)) throw InputError("unknown color " + std::to_string(c));

  std::vector<char> in(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  if (state.color(v) == c) {
    in[v] = 1;
    stack.push_back(v);
  } else {
    const int blob = state.blob_of(v);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (state.blob_of(u) != blob) continue;
      for (Vertex w : g.neighbors(u)) {
        if (state.color(w) == c && !in[w]) {
          in[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!in[w] && state.color(w) == c) {
        in[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (in[u]) out.push_back(u);
  }
  return out;
}

VerifyResult verify_solution(const ColoredGraph& g, const Variant& variant,
                             std::span<const Move> moves) {
  VerifyResult result;
  result.length = static_cast<int>(moves.size());
  try {
    variant.validate(g);
  } catch (const Error& e) {
    result.first_violation = 0;
    result.reason = e.what();
    return result;
  }
  GameState state(g);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      state = state.apply(moves[i], variant);
    } catch (const Error& e) {
      result.first_violation = static_cast<int>(i);
      result.reason = e.what();
      return result;
    }
  }
  if (!state.monochrome()) {
    result.first_violation = result.length;
    result.reason = "board is not monochrome after " + std::to_string(result.length) + " moves (" +
                    std::to_string(state.blob_count()) + " blobs remain)";
    return result;
  }
  result.valid = true;
  result.final_color = state.color(0);
  return result;
}

Contraction contract(const GameState& state) {
  const ColoredGraph& g = state.graph();
  std::vector<Color> colors(state.blob_count());
  for (int b = 0; b < state.blob_count(); ++b) colors[b] = state.blob_color(b);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    int a = state.blob_of(u);
    int b = state.blob_of(v);
    if (a == b) continue;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> map(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) map[v] = state.blob_of(v);
  return Contraction{ColoredGraph(g.k(), std::move(colors), std::move(edges)), std::move(map)};
}

Bounds bounds(const GameState& state) {
  return Bounds{state.distinct_colors() - 1, state.blob_count() - 1};
}

Bounds bounds(const ColoredGraph& g) { return bounds(GameState(g)); }

}  // namespace flood
