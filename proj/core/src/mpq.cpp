#include "flood/mpq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "flood/chordal.hpp"
#include "flood/disjoint_set.hpp"
#include "flood/errors.hpp"

namespace flood {

const char* to_string(MpqNode::Kind kind) {
  switch (kind) {
    case MpqNode::Kind::leaf:
      return "leaf";
    case MpqNode::Kind::p:
      return "P";
    case MpqNode::Kind::q:
      return "Q";
  }
  return "?";
}

namespace {

struct NotInterval {};

using Set = std::vector<int>;  // sorted clique ids

class Builder {
 public:
  Builder(MpqTree& tree, const std::vector<Set>& cliques_of)
      : tree_(tree), cl_(cliques_of), mark_(tree.cliques.size(), 0) {}

  int build(const Set& x, const std::vector<Vertex>& verts) {
    std::vector<Vertex> u;
    std::vector<Vertex> rest;
    for (Vertex v : verts) (cl_[v].size() == x.size() ? u : rest).push_back(v);

    if (x.size() == 1) {
      MpqNode leaf;
      leaf.kind = MpqNode::Kind::leaf;
      leaf.vertices = verts;
      leaf.clique = x[0];
      return add(std::move(leaf));
    }

    std::map<int, int> local;
    for (std::size_t i = 0; i < x.size(); ++i) local[x[i]] = static_cast<int>(i);
    DisjointSet dsu(static_cast<int>(x.size()));
    for (Vertex v : rest) {
      for (int c : cl_[v]) dsu.unite(local[cl_[v][0]], local[c]);
    }
    std::vector<Set> comps;
    std::vector<int> comp_of_root(x.size(), -1);
    for (std::size_t i = 0; i < x.size(); ++i) {
      int r = dsu.find(static_cast<int>(i));
      if (comp_of_root[r] < 0) {
        comp_of_root[r] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[comp_of_root[r]].push_back(x[i]);
    }

    if (comps.size() >= 2) {
      std::vector<std::vector<Vertex>> child_verts(comps.size());
      for (Vertex v : rest) {
        child_verts[comp_of_root[dsu.find(local[cl_[v][0]])]].push_back(v);
      }
      std::vector<int> children;
      for (std::size_t i = 0; i < comps.size(); ++i) children.push_back(build(comps[i], child_verts[i]));
      MpqNode p;
      p.kind = MpqNode::Kind::p;
      p.vertices = std::move(u);
      p.children = std::move(children);
      return add(std::move(p));
    }
    return build_q(x, u, rest);
  }

 private:
  int add(MpqNode node) {
    tree_.nodes.push_back(std::move(node));
    return static_cast<int>(tree_.nodes.size()) - 1;
  }

  static bool overlap(const Set& a, const Set& b) {
    bool common = false;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t shared = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        common = true;
        ++shared;
        ++i;
        ++j;
      } else if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return common && shared < a.size() && shared < b.size();
  }

  // Ordered partition of the covered cliques; A is added next to what it touches.
  void insert(std::vector<Set>& blocks, const Set& a) {
    for (int c : a) mark_[c] = 1;
    const int t = static_cast<int>(blocks.size());
    std::vector<int> cnt(t, 0);
    int covered = 0;
    for (int b = 0; b < t; ++b) {
      for (int c : blocks[b]) cnt[b] += mark_[c];
      covered += cnt[b];
    }
    Set fresh;
    for (int c : a) {
      bool seen = false;
      for (const auto& blk : blocks) seen = seen || std::binary_search(blk.begin(), blk.end(), c);
      if (!seen) fresh.push_back(c);
    }
    int i = -1;
    int j = -1;
    for (int b = 0; b < t; ++b) {
      if (cnt[b] > 0) {
        if (i < 0) i = b;
        j = b;
      }
    }
    auto full = [&](int b) { return cnt[b] == static_cast<int>(blocks[b].size()); };
    auto split = [&](int b, bool inside_right) {
      Set in;
      Set out;
      for (int c : blocks[b]) (mark_[c] ? in : out).push_back(c);
      std::vector<Set> parts;
      if (inside_right) {
        parts = {out, in};
      } else {
        parts = {in, out};
      }
      std::erase_if(parts, [](const Set& s) { return s.empty(); });
      return parts;
    };
    auto fail = [&]() {
      for (int c : a) mark_[c] = 0;
      throw NotInterval{};
    };

    if (i < 0) fail();
    for (int b = i + 1; b < j; ++b) {
      if (!full(b)) fail();
    }
    (void)covered;

    std::vector<Set> out;
    if (fresh.empty()) {
      if (i == j) fail();
      for (int b = 0; b < i; ++b) out.push_back(blocks[b]);
      for (auto& s : split(i, true)) out.push_back(std::move(s));
      for (int b = i + 1; b < j; ++b) out.push_back(blocks[b]);
      for (auto& s : split(j, false)) out.push_back(std::move(s));
      for (int b = j + 1; b < t; ++b) out.push_back(blocks[b]);
    } else {
      bool right_ok = j == t - 1 && (full(j) || i == j);
      bool left_ok = i == 0 && (full(i) || i == j);
      if (right_ok) {
        for (int b = 0; b < i; ++b) out.push_back(blocks[b]);
        for (auto& s : split(i, true)) out.push_back(std::move(s));
        for (int b = i + 1; b <= j; ++b) out.push_back(blocks[b]);
        out.push_back(fresh);
      } else if (left_ok) {
        out.push_back(fresh);
        for (int b = 0; b < j; ++b) out.push_back(blocks[b]);
        for (auto& s : split(j, false)) out.push_back(std::move(s));
        for (int b = j + 1; b < t; ++b) out.push_back(blocks[b]);
      } else {
        fail();
      }
    }
    for (int c : a) mark_[c] = 0;
    blocks = std::move(out);
  }

  int build_q(const Set& x, const std::vector<Vertex>& u, const std::vector<Vertex>& rest) {
    std::map<Set, std::vector<Vertex>> by_set;
    for (Vertex v : rest) by_set[cl_[v]].push_back(v);
    std::vector<Set> sets;
    for (const auto& [s, vs] : by_set) sets.push_back(s);
    const int s = static_cast<int>(sets.size());

    // Overlap component whose union is all of x.
    std::vector<int> comp(s, -1);
    std::vector<int> order;
    for (int start = 0; start < s && order.empty(); ++start) {
      if (comp[start] >= 0) continue;
      std::vector<int> bfs{start};
      comp[start] = start;
      for (std::size_t h = 0; h < bfs.size(); ++h) {
        for (int o = 0; o < s; ++o) {
          if (comp[o] < 0 && overlap(sets[bfs[h]], sets[o])) {
            comp[o] = start;
            bfs.push_back(o);
          }
        }
      }
      Set uni;
      for (int m : bfs) uni.insert(uni.end(), sets[m].begin(), sets[m].end());
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      if (uni == x) order = std::move(bfs);
    }
    if (order.empty()) throw NotInterval{};

    std::vector<Set> blocks{sets[order[0]]};
    for (std::size_t h = 1; h < order.size(); ++h) insert(blocks, sets[order[h]]);
    if (blocks.front().front() > blocks.back().front()) std::reverse(blocks.begin(), blocks.end());

    const int m = static_cast<int>(blocks.size());
    std::vector<int> block_of(tree_.cliques.size(), -1);
    for (int b = 0; b < m; ++b) {
      for (int c : blocks[b]) block_of[c] = b;
    }

    std::vector<std::vector<Vertex>> sections(m, u);
    std::vector<std::vector<Vertex>> child_verts(m);
    for (const auto& [set, vs] : by_set) {
      int lo = m;
      int hi = -1;
      std::size_t total = 0;
      for (int c : set) {
        lo = std::min(lo, block_of[c]);
        hi = std::max(hi, block_of[c]);
      }
      if (lo == hi) {
        child_verts[lo].insert(child_verts[lo].end(), vs.begin(), vs.end());
        continue;
      }
      for (int b = lo; b <= hi; ++b) total += blocks[b].size();
      if (total != set.size()) throw NotInterval{};
      for (int b = lo; b <= hi; ++b) sections[b].insert(sections[b].end(), vs.begin(), vs.end());
    }

    MpqNode q;
    q.kind = MpqNode::Kind::q;
    for (int b = 0; b < m; ++b) {
      std::sort(sections[b].begin(), sections[b].end());
      std::sort(child_verts[b].begin(), child_verts[b].end());
      Set bx = blocks[b];
      std::sort(bx.begin(), bx.end());
      q.children.push_back(build(bx, child_verts[b]));
    }
    q.sections = std::move(sections);
    return add(std::move(q));
  }

  MpqTree& tree_;
  const std::vector<Set>& cl_;
  std::vector<char> mark_;
};

void collect_frontier(const MpqTree& t, int node, std::vector<int>& out) {
  const MpqNode& nd = t.nodes[node];
  if (nd.kind == MpqNode::Kind::leaf) {
    out.push_back(nd.clique);
    return;
  }
  for (int c : nd.children) collect_frontier(t, c, out);
}

[[noreturn]] void reject(const AdjacencyList& adj) {
  auto at = find_asteroidal_triple(adj);
  if (at) {
    ForbiddenStructure w{ForbiddenStructure::Kind::asteroidal_triple, *at};
    throw RecognitionError("graph is not an interval graph: " + w.describe(), w);
  }
  throw RecognitionError("graph is not an interval graph", std::nullopt);
}

}  // namespace

std::vector<int> MpqTree::frontier() const {
  std::vector<int> out;
  if (!nodes.empty()) collect_frontier(*this, root, out);
  return out;
}

std::vector<Vertex> MpqTree::root_vertices() const {
  const MpqNode& r = nodes[root];
  if (r.kind != MpqNode::Kind::q) return r.vertices;
  std::vector<Vertex> out;
  for (const auto& s : r.sections) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MpqTree build_mpq(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) throw InputError("graph has no vertices");
  if (!is_connected(adj)) throw InputError("graph is not connected");
  MpqTree t;
  t.vertex_count = n;
  t.cliques = maximal_cliques(adj);
  std::vector<Set> cl(n);
  for (int c = 0; c < static_cast<int>(t.cliques.size()); ++c) {
    for (Vertex v : t.cliques[c]) cl[v].push_back(c);
  }
  Set all(t.cliques.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Vertex> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  try {
    Builder b(t, cl);
    t.root = b.build(all, verts);
  } catch (const NotInterval&) {
    reject(adj);
  }
  if (!check_invariants(t, adj).empty()) reject(adj);
  return t;
}

bool is_interval(const AdjacencyList& adj) {
  try {
    build_mpq(adj);
    return true;
  } catch (const RecognitionError&) {
    return false;
  }
}

namespace {

// Vertex sets along each root-to-leaf path, keyed by leaf clique.
void path_unions(const MpqTree& t, int node, std::vector<Vertex>& acc,
                 std::vector<std::vector<Vertex>>& out) {
  const MpqNode& nd = t.nodes[node];
  const std::size_t mark = acc.size();
  if (nd.kind == MpqNode::Kind::q) {
    for (std::size_t i = 0; i < nd.children.size(); ++i) {
      acc.insert(acc.end(), nd.sections[i].begin(), nd.sections[i].end());
      path_unions(t, nd.children[i], acc, out);
      acc.resize(mark);
    }
    return;
  }
  acc.insert(acc.end(), nd.vertices.begin(), nd.vertices.end());
  if (nd.kind == MpqNode::Kind::leaf) {
    std::vector<Vertex> c = acc;
    std::sort(c.begin(), c.end());
    out[nd.clique] = std::move(c);
  } else {
    for (int ch : nd.children) path_unions(t, ch, acc, out);
  }
  acc.resize(mark);
}

}  // namespace

std::string check_invariants(const MpqTree& t, const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  if (t.vertex_count != n) return "vertex count mismatch";
  const int m = static_cast<int>(t.cliques.size());

  std::vector<int> frontier = t.frontier();
  std::vector<int> sorted = frontier;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(m);
  std::iota(expect.begin(), expect.end(), 0);
  if (sorted != expect) return "leaves do not match the maximal cliques one to one";

  std::vector<std::vector<Vertex>> unions(m);
  std::vector<Vertex> acc;
  path_unions(t, t.root, acc, unions);
  for (int c = 0; c < m; ++c) {
    if (unions[c] != t.cliques[c]) {
      return "clique " + std::to_string(c) + " differs from its root-to-leaf union";
    }
  }

  // Home node of each vertex: one leaf, one P-node or consecutive sections of one Q-node.
  std::vector<int> home(n, -1);
  for (int id = 0; id < static_cast<int>(t.nodes.size()); ++id) {
    const MpqNode& nd = t.nodes[id];
    if (nd.kind == MpqNode::Kind::q) {
      if (nd.children.size() < 3) return "Q-node with fewer than three children";
      if (nd.sections.size() != nd.children.size()) return "Q-node section count mismatch";
      std::vector<int> first(n, -1);
      std::vector<int> last(n, -1);
      std::vector<int> count(n, 0);
      for (int s = 0; s < static_cast<int>(nd.sections.size()); ++s) {
        for (Vertex v : nd.sections[s]) {
          if (first[v] < 0) first[v] = s;
          last[v] = s;
          ++count[v];
        }
      }
      for (Vertex v = 0; v < n; ++v) {
        if (first[v] < 0) continue;
        if (count[v] != last[v] - first[v] + 1) {
          return "vertex " + std::to_string(v) + " occupies non-consecutive sections";
        }
        if (home[v] >= 0) return "vertex " + std::to_string(v) + " stored in two nodes";
        home[v] = id;
      }
    } else {
      if (nd.kind == MpqNode::Kind::leaf && !nd.children.empty()) return "leaf with children";
      for (Vertex v : nd.vertices) {
        if (home[v] >= 0) return "vertex " + std::to_string(v) + " stored in two nodes";
        home[v] = id;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (home[v] < 0) return "vertex " + std::to_string(v) + " is not stored";
  }

  // Consecutive cliques along the frontier for every vertex, and adjacency.
  auto iv = realize_intervals(t);
  for (Vertex v = 0; v < n; ++v) {
    int count = 0;
    for (int pos = iv[v].first; pos <= iv[v].second; ++pos) {
      const auto& c = t.cliques[frontier[pos]];
      count += std::binary_search(c.begin(), c.end(), v);
    }
    if (count != iv[v].second - iv[v].first + 1) {
      return "cliques of vertex " + std::to_string(v) + " are not consecutive";
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool meet = iv[u].first <= iv[v].second && iv[v].first <= iv[u].second;
      if (meet != adjacent(adj, u, v)) return "realized intervals disagree with adjacency";
    }
  }
  return {};
}

std::vector<std::pair<int, int>> realize_intervals(const MpqTree& t) {
  std::vector<int> frontier = t.frontier();
  std::vector<std::pair<int, int>> out(t.vertex_count, {-1, -1});
  for (int pos = 0; pos < static_cast<int>(frontier.size()); ++pos) {
    for (Vertex v : t.cliques[frontier[pos]]) {
      if (out[v].first < 0) out[v].first = pos;
      out[v].second = pos;
    }
  }
  return out;
}

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

void dump(const MpqTree& t, int node, int depth, std::ostringstream& os) {
  const MpqNode& nd = t.nodes[node];
  os << std::string(2 * depth, ' ') << to_string(nd.kind);
  if (nd.kind == MpqNode::Kind::q) {
    for (const auto& s : nd.sections) os << ' ' << join(s);
  } else {
    os << ' ' << join(nd.vertices);
  }
  if (nd.kind == MpqNode::Kind::leaf) os << " clique " << nd.clique;
  os << '\n';
  for (int c : nd.children) dump(t, c, depth + 1, os);
}

void subtree_vertices(const MpqTree& t, int node, std::vector<Vertex>& out) {
  const MpqNode& nd = t.nodes[node];
  out.insert(out.end(), nd.vertices.begin(), nd.vertices.end());
  for (const auto& s : nd.sections) out.insert(out.end(), s.begin(), s.end());
  for (int c : nd.children) subtree_vertices(t, c, out);
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string to_text(const MpqTree& t) {
  std::ostringstream os;
  dump(t, t.root, 0, os);
  return os.str();
}

ColorSetPath clique_path(const MpqTree& t, const ColoredGraph& g) {
  ColorSetPath p;
  p.k = g.k();
  std::vector<int> frontier = t.frontier();
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    if (i > 0) {
      auto sep = intersect(t.cliques[frontier[i - 1]], t.cliques[frontier[i]]);
      p.sets.push_back(colors_of(g, sep));
      p.provenance.push_back(std::move(sep));
    }
    const auto& c = t.cliques[frontier[i]];
    p.sets.push_back(colors_of(g, c));
    p.provenance.push_back(c);
  }
  return p;
}

std::variant<ColorSetPath, UniversalCase> root_projection(const MpqTree& t, const ColoredGraph& g,
                                                          ProjectionMode mode) {
  if (t.vertex_count != g.vertex_count()) throw InputError("tree does not match the graph");
  const MpqNode& root = t.nodes[t.root];
  std::vector<Vertex> u = t.root_vertices();
  if (u.empty()) throw InputError("root vertex set is empty; graph is not connected");
  if (root.kind != MpqNode::Kind::q) return UniversalCase{g.distinct_colors(), u.front()};

  ColorSetPath p;
  p.k = g.k();
  for (std::size_t i = 0; i < root.sections.size(); ++i) {
    if (i > 0 && mode == ProjectionMode::separated) {
      auto sep = intersect(root.sections[i - 1], root.sections[i]);
      p.sets.push_back(colors_of(g, sep));
      p.provenance.push_back(std::move(sep));
    }
    std::vector<Vertex> members = root.sections[i];
    subtree_vertices(t, root.children[i], members);
    members = sorted_unique(std::move(members));
    p.sets.push_back(colors_of(g, members));
    p.provenance.push_back(std::move(members));
  }
  return p;
}

}  // namespace flood
