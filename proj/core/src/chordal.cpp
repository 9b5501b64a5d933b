#include "flood/chordal.hpp"

#include <algorithm>
#include <list>
#include <queue>

#include "flood/errors.hpp"

namespace flood {

std::vector<Vertex> lex_bfs(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  // Partition refinement over an ordered list of classes.
  std::list<std::vector<Vertex>> classes;
  if (n == 0) return {};
  std::vector<Vertex> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  classes.push_back(all);
  std::vector<char> done(n, 0);
  std::vector<char> mark(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  while (!classes.empty()) {
    auto& front = classes.front();
    Vertex v = front.front();
    front.erase(front.begin());
    if (front.empty()) classes.pop_front();
    done[v] = 1;
    order.push_back(v);
    for (Vertex u : adj[v]) mark[u] = 1;
    for (auto it = classes.begin(); it != classes.end();) {
      std::vector<Vertex> in;
      std::vector<Vertex> out;
      for (Vertex u : *it) (mark[u] ? in : out).push_back(u);
      if (!in.empty() && !out.empty()) {
        classes.insert(it, std::move(in));
        *it = std::move(out);
      }
      ++it;
    }
    for (Vertex u : adj[v]) mark[u] = 0;
  }
  return order;
}

std::optional<std::vector<Vertex>> perfect_elimination_order(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Vertex> order = lex_bfs(adj);
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex u : adj[v]) {
      if (pos[u] > pos[v] && (parent < 0 || pos[u] < pos[parent])) parent = u;
    }
    if (parent < 0) continue;
    for (Vertex u : adj[v]) {
      if (u != parent && pos[u] > pos[v] && !adjacent(adj, parent, u)) return std::nullopt;
    }
  }
  return order;
}

bool is_chordal(const AdjacencyList& adj) { return perfect_elimination_order(adj).has_value(); }

std::vector<std::vector<Vertex>> maximal_cliques(const AdjacencyList& adj) {
  auto peo = perfect_elimination_order(adj);
  if (!peo) {
    ForbiddenStructure w{ForbiddenStructure::Kind::chordless_cycle,
                         find_chordless_cycle(adj).value_or(std::vector<Vertex>{})};
    throw RecognitionError("graph is not chordal: " + w.describe(), w);
  }
  const int n = static_cast<int>(adj.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*peo)[i]] = i;
  std::vector<std::vector<Vertex>> candidates;
  for (Vertex v : *peo) {
    std::vector<Vertex> c{v};
    for (Vertex u : adj[v]) {
      if (pos[u] > pos[v]) c.push_back(u);
    }
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::vector<Vertex>> out;
  for (auto& c : candidates) {
    bool contained = false;
    for (const auto& m : out) {
      if (std::includes(m.begin(), m.end(), c.begin(), c.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Vertex>> find_chordless_cycle(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> blocked(n);
  std::vector<int> prev(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = adj[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex a = nb[i];
        Vertex b = nb[j];
        if (adjacent(adj, a, b)) continue;
        // shortest a-b path avoiding N[v] apart from a and b
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[v] = 1;
        for (Vertex u : nb) blocked[u] = 1;
        blocked[b] = 0;
        std::fill(prev.begin(), prev.end(), -1);
        std::queue<Vertex> q;
        q.push(a);
        blocked[a] = 1;
        while (!q.empty() && prev[b] < 0) {
          Vertex x = q.front();
          q.pop();
          for (Vertex y : adj[x]) {
            if (blocked[y]) continue;
            blocked[y] = 1;
            prev[y] = x;
            q.push(y);
          }
        }
        if (prev[b] < 0) continue;
        std::vector<Vertex> cycle{v};
        std::vector<Vertex> path;
        for (Vertex x = b; x != a; x = prev[x]) path.push_back(x);
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Component label of every vertex in G - N[x]; -1 on N[x].
std::vector<int> components_avoiding(const AdjacencyList& adj, Vertex x) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -2);
  comp[x] = -1;
  for (Vertex u : adj[x]) comp[u] = -1;
  int label = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -2) continue;
    comp[s] = label;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adj[v]) {
        if (comp[u] == -2) {
          comp[u] = label;
          stack.push_back(u);
        }
      }
    }
    ++label;
  }
  return comp;
}

}  // namespace

std::optional<std::vector<Vertex>> find_asteroidal_triple(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> comp(n);
  for (Vertex x = 0; x < n; ++x) comp[x] = components_avoiding(adj, x);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (adjacent(adj, a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (adjacent(adj, a, c) || adjacent(adj, b, c)) continue;
        if (comp[c][a] == comp[c][b] && comp[b][a] == comp[b][c] && comp[a][b] == comp[a][c]) {
          return std::vector<Vertex>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_claw(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = adj[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (adjacent(adj, nb[i], nb[j])) continue;
        for (std::size_t l = j + 1; l < nb.size(); ++l) {
          if (!adjacent(adj, nb[i], nb[l]) && !adjacent(adj, nb[j], nb[l])) {
            return std::vector<Vertex>{v, nb[i], nb[j], nb[l]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace flood
