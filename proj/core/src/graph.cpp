#include "flood/graph.hpp"

#include <algorithm>
#include <string>

#include "flood/errors.hpp"

namespace flood {

AdjacencyList make_adjacency(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  AdjacencyList adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  return adj;
}

std::vector<std::vector<Vertex>> connected_components(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.assign(1, s);
    std::vector<Vertex> comp;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const AdjacencyList& adj) {
  return adj.empty() || connected_components(adj).size() == 1;
}

bool adjacent(const AdjacencyList& adj, Vertex u, Vertex v) {
  const auto& list = adj[u];
  return std::binary_search(list.begin(), list.end(), v);
}

AdjacencyList induced(const AdjacencyList& adj, std::span<const Vertex> keep) {
  AdjacencyList out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex u : adj[keep[i]]) {
      auto it = std::lower_bound(keep.begin(), keep.end(), u);
      if (it != keep.end() && *it == u) out[i].push_back(static_cast<Vertex>(it - keep.begin()));
    }
  }
  return out;
}

ColoredGraph::ColoredGraph(int k, std::vector<Color> colors, std::vector<Edge> edges)
    : k_(k), colors_(std::move(colors)), edges_(std::move(edges)) {
  if (k_ < 1) throw InputError("k must be positive");
  if (colors_.empty()) throw InputError("graph must have at least one vertex");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1 || colors_[v] > k_) {
      throw InputError("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) +
                       " outside 1.." + std::to_string(k_));
    }
  }
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  adj_ = make_adjacency(vertex_count(), edges_);
  if (!is_connected(adj_)) throw InputError("graph is not connected");
}

int ColoredGraph::distinct_colors() const {
  std::vector<char> seen(k_ + 1, 0);
  int d = 0;
  for (Color c : colors_) {
    if (!seen[c]) {
      seen[c] = 1;
      ++d;
    }
  }
  return d;
}

std::uint32_t ColoredGraph::color_mask() const {
  if (k_ > 32) throw CapacityError("color masks support at most 32 colors");
  std::uint32_t mask = 0;
  for (Color c : colors_) mask |= std::uint32_t{1} << (c - 1);
  return mask;
}

ColoredGraph ColoredGraph::recolored(std::vector<Color> colors) const {
  if (colors.size() != colors_.size()) throw InputError("recoloring has the wrong length");
  return ColoredGraph(k_, std::move(colors), edges_);
}

}  // namespace flood
