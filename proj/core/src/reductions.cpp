#include "flood/reductions.hpp"

#include <algorithm>

#include "flood/disjoint_set.hpp"
#include "flood/errors.hpp"

namespace flood {

void VcInstance::validate() const {
  if (n < 0) throw InputError("negative vertex count");
  make_adjacency(n, edges);
}

namespace {

void require_edges_connected(const VcInstance& vc) {
  vc.validate();
  if (vc.m() == 0) throw DomainError("source graph has no edges");
  DisjointSet dsu(vc.n);
  for (const auto& [u, v] : vc.edges) dsu.unite(u, v);
  for (const auto& [u, v] : vc.edges) {
    if (!dsu.same(u, vc.edges.front().first)) {
      throw DomainError("source edges form more than one component");
    }
  }
}

std::string edge_tag(int i) { return "e" + std::to_string(i); }

}  // namespace

Reduction<ColoredGraph> vc_to_caterpillar(const VcInstance& vc) {
  require_edges_connected(vc);
  const int m = vc.m();
  const int backbone = 5 * m + 1;
  const int total = backbone + 2 * m;
  std::vector<Color> colors(total);
  std::vector<Edge> edges;
  ReductionCertificate cert;
  cert.offset = 3 * m;
  cert.edge_order = vc.edges;
  cert.vertex_legend.resize(total);
  cert.color_legend[1] = "b";
  cert.color_legend[2] = "e";
  for (int u = 0; u < vc.n; ++u) cert.color_legend[u + 3] = "v" + std::to_string(u);

  for (int v = 0; v + 1 < backbone; ++v) edges.emplace_back(v, v + 1);
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = vc.edges[i];
    const int b1 = 5 * i;
    const int h3 = backbone + 2 * i;
    const int h4 = h3 + 1;
    const Color cu = u + 3;
    const Color cv = v + 3;
    const Color pattern[6] = {1, 2, cv, cu, 2, 1};
    for (int p = 0; p < 6; ++p) {
      colors[b1 + p] = pattern[p];
      std::string& role = cert.vertex_legend[b1 + p];
      if (!role.empty()) role += ",";
      role += "b" + std::to_string(p + 1) + "/" + edge_tag(i);
    }
    colors[h3] = cu;
    colors[h4] = cv;
    cert.vertex_legend[h3] = "h3/" + edge_tag(i);
    cert.vertex_legend[h4] = "h4/" + edge_tag(i);
    edges.emplace_back(b1 + 2, h3);
    edges.emplace_back(b1 + 3, h4);
  }
  return {ColoredGraph(vc.n + 2, std::move(colors), std::move(edges)), std::move(cert)};
}

namespace {

struct PiLayout {
  int m;
  int stride() const { return 2 * m + 1; }
  int backbone(int i) const { return i * stride(); }
  int left(int i, int j) const { return backbone(i) + m - j; }
  int twin(int i) const { return backbone(i) + m; }
  int twin2(int i) const { return backbone(i) + m + 1; }
  int right(int i, int j) const { return backbone(i) + m + 1 + j; }
  int total() const { return 1 + m * stride(); }
};

}  // namespace

Reduction<IntervalRepresentation> vc_to_proper_interval(const VcInstance& vc) {
  vc.validate();
  if (vc.m() < 2) {
    throw DomainError("proper interval construction needs at least two edges (paths of m-1 >= 1 vertices)");
  }
  require_edges_connected(vc);
  const int m = vc.m();
  const int n = vc.n;
  const PiLayout at{m};
  const int k = n + m * (m - 1) + 1;
  auto w_color = [&](int i, int j) { return n + 2 + i * (m - 1) + j - 1; };

  std::vector<Color> colors(at.total());
  std::vector<Edge> edges;
  ReductionCertificate cert;
  cert.offset = m * m;
  cert.edge_order = vc.edges;
  cert.vertex_legend.resize(at.total());
  cert.color_legend[1] = "b";
  for (int u = 0; u < n; ++u) cert.color_legend[u + 2] = "v" + std::to_string(u);

  for (int i = 0; i <= m; ++i) {
    colors[at.backbone(i)] = 1;
    cert.vertex_legend[at.backbone(i)] = "I" + std::to_string(i);
  }
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = vc.edges[i];
    const std::string tag = "/" + edge_tag(i);
    colors[at.twin(i)] = u + 2;
    colors[at.twin2(i)] = v + 2;
    cert.vertex_legend[at.twin(i)] = "J" + tag;
    cert.vertex_legend[at.twin2(i)] = "J'" + tag;
    for (int j = 1; j < m; ++j) {
      cert.color_legend[w_color(i, j)] = "w" + std::to_string(j) + tag;
      colors[at.left(i, j)] = w_color(i, j);
      colors[at.right(i, j)] = w_color(i, j);
      cert.vertex_legend[at.left(i, j)] = "w" + std::to_string(j) + tag + "/left";
      cert.vertex_legend[at.right(i, j)] = "w" + std::to_string(j) + tag + "/right";
    }
    edges.emplace_back(at.backbone(i), at.left(i, m - 1));
    for (int j = m - 1; j > 1; --j) edges.emplace_back(at.left(i, j), at.left(i, j - 1));
    edges.emplace_back(at.left(i, 1), at.twin(i));
    edges.emplace_back(at.left(i, 1), at.twin2(i));
    edges.emplace_back(at.twin(i), at.twin2(i));
    edges.emplace_back(at.twin(i), at.right(i, 1));
    edges.emplace_back(at.twin2(i), at.right(i, 1));
    for (int j = 1; j + 1 < m; ++j) edges.emplace_back(at.right(i, j), at.right(i, j + 1));
    edges.emplace_back(at.right(i, m - 1), at.backbone(i + 1));
  }
  IntervalRepresentation rep = build_representation(ColoredGraph(k, std::move(colors), std::move(edges)));
  return {std::move(rep), std::move(cert)};
}

VertexCover vc_bruteforce(const VcInstance& vc) {
  vc.validate();
  if (vc.n > 20) throw BudgetExceeded("vertex cover brute force is limited to n <= 20", 0);
  const int n = vc.n;
  for (int size = 0; size <= n; ++size) {
    // lexicographic combinations of `size` vertices
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int v : pick) mask |= 1u << v;
      bool covers = std::all_of(vc.edges.begin(), vc.edges.end(), [&](const Edge& e) {
        return (mask >> e.first & 1u) || (mask >> e.second & 1u);
      });
      if (covers) return {size, pick};
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {n, {}};
}

namespace {

std::vector<char> cover_flags(const VcInstance& vc, const std::vector<Vertex>& cover) {
  std::vector<char> in(vc.n, 0);
  for (Vertex v : cover) {
    if (v < 0 || v >= vc.n) throw InputError("cover names unknown vertex " + std::to_string(v));
    in[v] = 1;
  }
  for (const auto& [u, v] : vc.edges) {
    if (!in[u] && !in[v]) {
      throw InputError("not a vertex cover: edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} is uncovered");
    }
  }
  return in;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

std::vector<Move> caterpillar_moves(const VcInstance& vc, const std::vector<Vertex>& cover) {
  const auto in = cover_flags(vc, cover);
  std::vector<Move> moves;
  for (int i = 0; i < vc.m(); ++i) {
    const auto [u, v] = vc.edges[i];
    const int b1 = 5 * i;
    // Keep the hair whose color is in the cover.
    const bool keep_v = in[v];
    const Vertex pivot = keep_v ? b1 + 2 : b1 + 3;
    moves.push_back({pivot, keep_v ? u + 3 : v + 3});
    moves.push_back({pivot, 2});
    moves.push_back({pivot, 1});
  }
  for (Vertex x : sorted_unique(cover)) moves.push_back({0, x + 3});
  return moves;
}

std::vector<Move> proper_interval_moves(const VcInstance& vc, const std::vector<Vertex>& cover) {
  const auto in = cover_flags(vc, cover);
  const int m = vc.m();
  const PiLayout at{m};
  auto w_color = [&](int i, int j) { return vc.n + 2 + i * (m - 1) + j - 1; };
  std::vector<Move> moves;
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = vc.edges[i];
    // Walk the twin whose vertex may be left uncovered along w1..w(m-1), b.
    const Vertex walker = in[u] ? at.twin2(i) : at.twin(i);
    for (int j = 1; j < m; ++j) moves.push_back({walker, w_color(i, j)});
    moves.push_back({walker, 1});
  }
  for (Vertex x : sorted_unique(cover)) moves.push_back({0, x + 2});
  return moves;
}

}  // namespace flood
