#include "flood/split.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <unordered_map>

#include "flood/errors.hpp"

namespace flood {

namespace {

bool clique_and_independent(const AdjacencyList& adj, const std::vector<Vertex>& k,
                            const std::vector<Vertex>& i) {
  for (std::size_t a = 0; a < k.size(); ++a) {
    for (std::size_t b = a + 1; b < k.size(); ++b) {
      if (!adjacent(adj, k[a], k[b])) return false;
    }
  }
  for (std::size_t a = 0; a < i.size(); ++a) {
    for (std::size_t b = a + 1; b < i.size(); ++b) {
      if (adjacent(adj, i[a], i[b])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> forbidden_split_subgraph(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  if (n > 40) return std::nullopt;
  // 2K2 or C4 on four vertices: exactly two disjoint edges or a 4-cycle.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          std::vector<Vertex> vs{a, b, c, d};
          std::vector<int> deg(4, 0);
          int edges = 0;
          for (int x = 0; x < 4; ++x) {
            for (int y = x + 1; y < 4; ++y) {
              if (adjacent(adj, vs[x], vs[y])) {
                ++deg[x];
                ++deg[y];
                ++edges;
              }
            }
          }
          bool all1 = std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1; });
          bool all2 = std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; });
          if ((edges == 2 && all1) || (edges == 4 && all2)) return vs;
        }
      }
    }
  }
  std::vector<int> pick(5);
  for (pick[0] = 0; pick[0] < n; ++pick[0]) {
    for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1]) {
      for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2]) {
        for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3]) {
          for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
            int edges = 0;
            bool ok = true;
            for (int x = 0; x < 5 && ok; ++x) {
              int deg = 0;
              for (int y = 0; y < 5; ++y) {
                if (x != y && adjacent(adj, pick[x], pick[y])) ++deg;
              }
              ok = deg == 2;
              edges += deg;
            }
            if (ok && edges == 10) {
              // 2-regular on five vertices is a 5-cycle
              return std::vector<Vertex>(pick.begin(), pick.end());
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SplitDecomposition recognize_split(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) throw InputError("graph has no vertices");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[order[i]].size()) >= i) m = i + 1;
  }
  long long top = 0;
  long long bottom = 0;
  for (int i = 0; i < n; ++i) (i < m ? top : bottom) += static_cast<long long>(adj[order[i]].size());
  if (top != static_cast<long long>(m) * (m - 1) + bottom) {
    auto w = forbidden_split_subgraph(adj);
    std::optional<ForbiddenStructure> fs;
    if (w) fs = ForbiddenStructure{ForbiddenStructure::Kind::not_split, *w};
    throw RecognitionError("graph is not a split graph", fs);
  }
  std::vector<char> in_k(n, 0);
  for (int i = 0; i < m; ++i) in_k[order[i]] = 1;
  auto collect = [&](char want) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
      if (in_k[v] == want) out.push_back(v);
    }
    return out;
  };
  // Grow to a maximum clique: at most one independent vertex sees all of K.
  std::vector<Vertex> k = collect(1);
  for (Vertex v = 0; v < n; ++v) {
    if (in_k[v]) continue;
    bool all = std::all_of(k.begin(), k.end(), [&](Vertex u) { return adjacent(adj, u, v); });
    if (all) {
      in_k[v] = 1;
      k = collect(1);
      break;
    }
  }
  SplitDecomposition best{k, collect(0)};
  // Other maximum decompositions differ by a single swap.
  for (Vertex x : k) {
    for (Vertex y = 0; y < n; ++y) {
      if (in_k[y]) continue;
      std::vector<Vertex> k2;
      for (Vertex u : k) {
        if (u != x) k2.push_back(u);
      }
      k2.push_back(y);
      std::sort(k2.begin(), k2.end());
      if (k2 >= best.clique) continue;
      std::vector<Vertex> i2;
      for (Vertex v = 0; v < n; ++v) {
        if (!std::binary_search(k2.begin(), k2.end(), v)) i2.push_back(v);
      }
      if (clique_and_independent(adj, k2, i2)) best = {k2, i2};
    }
  }
  return best;
}

bool is_split(const AdjacencyList& adj) {
  try {
    recognize_split(adj);
    return true;
  } catch (const RecognitionError&) {
    return false;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

struct TwinClass {
  Color color;
  std::vector<int> neighbors;  // indices into the clique
};

}  // namespace

Solution solve_split(const ColoredGraph& g, const SearchBudget& budget,
                     std::vector<std::string>* warnings) {
  budget.validate();
  SplitDecomposition dec = recognize_split(g);
  if (warnings && g.k() >= 8) {
    warnings->push_back("k = " + std::to_string(g.k()) +
                        ": split search grows like (k!)^2 and may exhaust the budget");
  }
  const auto& kv = dec.clique;
  const int kn = static_cast<int>(kv.size());
  std::vector<int> k_index(g.vertex_count(), -1);
  for (int i = 0; i < kn; ++i) k_index[kv[i]] = i;

  // Independent vertices with equal color and neighborhood are absorbed together.
  std::map<std::pair<Color, std::vector<int>>, int> class_of;
  std::vector<TwinClass> classes;
  for (Vertex v : dec.independent) {
    std::vector<int> nb;
    for (Vertex u : g.neighbors(v)) nb.push_back(k_index[u]);
    std::sort(nb.begin(), nb.end());
    auto key = std::make_pair(g.color(v), nb);
    if (class_of.emplace(key, static_cast<int>(classes.size())).second) {
      classes.push_back({g.color(v), nb});
    }
  }
  const int ic = static_cast<int>(classes.size());

  // State: clique colors (one byte each, two when k > 255) then absorbed bits.
  const bool wide = g.k() > 255;
  auto encode = [&](const std::vector<Color>& kc, const std::vector<char>& absorbed) {
    std::string key;
    for (Color c : kc) {
      key.push_back(static_cast<char>(c & 0xff));
      if (wide) key.push_back(static_cast<char>(c >> 8));
    }
    for (int i = 0; i < ic; i += 8) {
      unsigned char byte = 0;
      for (int b = 0; b < 8 && i + b < ic; ++b) byte |= static_cast<unsigned char>(absorbed[i + b]) << b;
      key.push_back(static_cast<char>(byte));
    }
    return key;
  };
  auto absorb = [&](const std::vector<Color>& kc, std::vector<char>& absorbed) {
    for (int i = 0; i < ic; ++i) {
      if (absorbed[i]) continue;
      for (int u : classes[i].neighbors) {
        if (kc[u] == classes[i].color) {
          absorbed[i] = 1;
          break;
        }
      }
    }
  };
  auto distinct = [&](const std::vector<Color>& kc, const std::vector<char>& absorbed) {
    std::vector<Color> cs(kc.begin(), kc.end());
    for (int i = 0; i < ic; ++i) {
      if (!absorbed[i]) cs.push_back(classes[i].color);
    }
    std::sort(cs.begin(), cs.end());
    return static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
  };

  struct Node {
    std::vector<Color> kc;
    std::vector<char> absorbed;
    int parent;
    Move via;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  std::vector<Color> kc0;
  for (Vertex v : kv) kc0.push_back(g.color(v));
  std::vector<char> ab0(ic, 0);
  absorb(kc0, ab0);
  nodes.push_back({kc0, ab0, -1, {}});
  seen.emplace(encode(kc0, ab0), 0);

  auto finish = [&](int goal) {
    Solution s;
    for (int x = goal; nodes[x].parent >= 0; x = nodes[x].parent) s.witness.push_back(nodes[x].via);
    std::reverse(s.witness.begin(), s.witness.end());
    s.opt = static_cast<int>(s.witness.size());
    return s;
  };
  if (distinct(kc0, ab0) == 1) return {};

  const auto start = Clock::now();
  int lower = distinct(kc0, ab0) - 1;
  std::size_t begin = 0;
  std::size_t end = 1;
  int depth = 0;
  std::vector<char> present(g.k() + 1);
  while (begin < end) {
    if (depth >= budget.max_depth) throw BudgetExceeded("depth budget exhausted", lower);
    for (std::size_t s = begin; s < end; ++s) {
      const std::vector<Color> kc = nodes[s].kc;
      const std::vector<char> ab = nodes[s].absorbed;
      std::fill(present.begin(), present.end(), 0);
      for (Color c : kc) present[c] = 1;
      for (int i = 0; i < ic; ++i) {
        if (!ab[i]) present[classes[i].color] = 1;
      }
      for (int a = 0; a < kn; ++a) {
        // one move per clique color class, named by its first vertex
        bool first = true;
        for (int b = 0; b < a; ++b) first = first && kc[b] != kc[a];
        if (!first) continue;
        for (Color c = 1; c <= g.k(); ++c) {
          if (!present[c] || c == kc[a]) continue;
          std::vector<Color> nk = kc;
          for (int b = 0; b < kn; ++b) {
            if (kc[b] == kc[a]) nk[b] = c;
          }
          std::vector<char> nab = ab;
          absorb(nk, nab);
          std::string key = encode(nk, nab);
          if (!seen.emplace(key, static_cast<int>(nodes.size())).second) continue;
          const int d = distinct(nk, nab);
          nodes.push_back({std::move(nk), std::move(nab), static_cast<int>(s), {kv[a], c}});
          if (d == 1) return finish(static_cast<int>(nodes.size()) - 1);
          if (static_cast<std::int64_t>(nodes.size()) > budget.max_states) {
            throw BudgetExceeded("state budget exhausted", lower);
          }
          if ((nodes.size() & 255) == 0 && Clock::now() - start > budget.time_limit) {
            throw BudgetExceeded("time budget exhausted", lower);
          }
        }
      }
    }
    ++depth;
    lower = std::max(lower, depth);
    begin = end;
    end = nodes.size();
  }
  throw BudgetExceeded("split search exhausted without a monochrome state", lower);
}

}  // namespace flood
