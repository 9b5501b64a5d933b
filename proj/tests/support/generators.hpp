#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "flood/graph.hpp"

namespace flood::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<Color> random_colors(Rng& rng, int n, int k) {
  std::vector<Color> colors(n);
  for (auto& c : colors) c = uniform(rng, 1, k);
  return colors;
}

// Random spanning tree plus extra edges with probability p.
inline std::vector<Edge> random_connected_edges(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    int u = uniform(rng, 0, v - 1);
    edges.emplace_back(u, v);
    has[u][v] = has[v][u] = 1;
  }
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!has[u][v] && extra(rng)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

inline ColoredGraph random_graph(Rng& rng, int n, int k, double p) {
  return ColoredGraph(k, random_colors(rng, n, k), random_connected_edges(rng, n, p));
}

inline ColoredGraph path_graph(std::vector<Color> colors, int k = 0) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < static_cast<int>(colors.size()); ++i) edges.emplace_back(i, i + 1);
  if (k == 0) k = *std::max_element(colors.begin(), colors.end());
  return ColoredGraph(k, std::move(colors), std::move(edges));
}

// Single edge gadget: backbone 0..5, hair 6 on vertex 2, hair 7 on vertex 3.
// Colors b=1, e=2, v=3, u=4.
inline ColoredGraph gadget_graph() {
  return ColoredGraph(4, {1, 2, 3, 4, 2, 1, 4, 3},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {3, 7}});
}

}  // namespace flood::testing

namespace flood::testing {

// Random connected interval model: intervals with endpoints in [0, span].
inline std::vector<std::pair<int, int>> random_intervals(Rng& rng, int n, int span, int max_len) {
  while (true) {
    std::vector<std::pair<int, int>> iv(n);
    for (auto& [l, r] : iv) {
      l = uniform(rng, 0, span);
      r = std::min(span, l + uniform(rng, 0, max_len));
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) edges.emplace_back(u, v);
      }
    }
    if (is_connected(make_adjacency(n, edges))) return iv;
  }
}

}  // namespace flood::testing

namespace flood::testing {

// Proper interval graph from a nondecreasing reach sequence: i < j adjacent iff j <= reach[i].
inline std::vector<Edge> reach_edges(const std::vector<int>& reach) {
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(reach.size()); ++i) {
    for (int j = i + 1; j <= reach[i]; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

inline std::vector<int> random_reach(Rng& rng, int n) {
  std::vector<int> reach(n);
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    int lo = std::max(prev, std::min(i + 1, n - 1));
    int hi = std::min(n - 1, lo + 3);
    reach[i] = uniform(rng, lo, hi);
    prev = reach[i];
  }
  return reach;
}

}  // namespace flood::testing

namespace flood::testing {

// Clique 0..q-1; every other vertex sees a random nonempty subset of it.
inline std::vector<Edge> random_split_edges(Rng& rng, int n, int q) {
  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) edges.emplace_back(u, v);
  }
  for (int x = q; x < n; ++x) {
    std::vector<int> nb;
    while (nb.empty()) {
      for (int u = 0; u < q; ++u) {
        if (uniform(rng, 0, 1)) nb.push_back(u);
      }
    }
    for (int u : nb) edges.emplace_back(u, x);
  }
  return edges;
}

inline ColoredGraph random_split(Rng& rng, int n, int k) {
  int q = uniform(rng, 1, n);
  return ColoredGraph(k, random_colors(rng, n, k), random_split_edges(rng, n, q));
}

}  // namespace flood::testing
