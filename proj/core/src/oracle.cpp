#include "flood/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "flood/disjoint_set.hpp"
#include "flood/errors.hpp"

namespace flood {

void SearchBudget::validate() const {
  if (max_states <= 0) throw InputError("max_states must be positive");
  if (max_depth <= 0) throw InputError("max_depth must be positive");
  if (time_limit.count() <= 0) throw InputError("time_limit must be positive");
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchResult {
  int opt = 0;
  std::vector<Move> witness;  // quotient-vertex moves
  Move first;                 // least optimal first move
};

struct Quotient {
  int n = 0;
  std::vector<Edge> edges;
  int k = 0;
};

// Blobs of a quotient coloring: label per quotient vertex, canonical order.
struct Blobs {
  std::vector<int> of;
  std::vector<int> rep;
};

class Searcher {
 public:
  Searcher(const ColoredGraph& q, std::optional<int> pivot, const SearchBudget& budget)
      : q_(q), pivot_(pivot), budget_(budget), bits_(std::bit_width(static_cast<unsigned>(q.k()))) {}

  SearchResult run(bool want_first) {
    if (q_.vertex_count() * bits_ <= 64) return search<std::uint64_t>(want_first);
    return search<std::string>(want_first);
  }

 private:
  Blobs blobs_of(const std::vector<Color>& colors) const {
    const int n = q_.vertex_count();
    DisjointSet dsu(n);
    for (const auto& [u, v] : q_.edges()) {
      if (colors[u] == colors[v]) dsu.unite(u, v);
    }
    Blobs b;
    b.of.assign(n, -1);
    std::vector<int> label(n, -1);
    for (int v = 0; v < n; ++v) {
      int r = dsu.find(v);
      if (label[r] < 0) {
        label[r] = static_cast<int>(b.rep.size());
        b.rep.push_back(v);
      }
      b.of[v] = label[r];
    }
    return b;
  }

  static int distinct(const std::vector<Color>& colors, int k) {
    std::uint64_t seen = 0;
    std::vector<char> big;
    int d = 0;
    for (Color c : colors) {
      if (c < 64) {
        if (!(seen >> c & 1)) {
          seen |= std::uint64_t{1} << c;
          ++d;
        }
      } else {
        if (big.empty()) big.assign(k + 1, 0);
        if (!big[c]) {
          big[c] = 1;
          ++d;
        }
      }
    }
    return d;
  }

  void encode(const std::vector<Color>& colors, std::uint64_t& key) const {
    key = 0;
    for (Color c : colors) key = key << bits_ | static_cast<std::uint64_t>(c);
  }
  void encode(const std::vector<Color>& colors, std::string& key) const {
    key.clear();
    for (Color c : colors) {
      key.push_back(static_cast<char>(c & 0xff));
      key.push_back(static_cast<char>(c >> 8));
    }
  }
  void decode(std::uint64_t key, std::vector<Color>& colors) const {
    const int n = q_.vertex_count();
    colors.resize(n);
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (int v = n - 1; v >= 0; --v) {
      colors[v] = static_cast<Color>(key & mask);
      key >>= bits_;
    }
  }
  void decode(const std::string& key, std::vector<Color>& colors) const {
    colors.resize(q_.vertex_count());
    for (std::size_t v = 0; v < colors.size(); ++v) {
      colors[v] = static_cast<unsigned char>(key[2 * v]) |
                  static_cast<unsigned char>(key[2 * v + 1]) << 8;
    }
  }

  void check_budget(std::int64_t states, int lower) {
    if (states > budget_.max_states) {
      throw BudgetExceeded("state budget of " + std::to_string(budget_.max_states) + " exhausted",
                           lower);
    }
    if ((++ticks_ & 255) == 0 && Clock::now() - start_ > budget_.time_limit) {
      throw BudgetExceeded("time budget exhausted", lower);
    }
  }

  template <class Key>
  SearchResult search(bool want_first) {
    start_ = Clock::now();
    const int k = q_.k();
    std::vector<Key> keys;
    std::vector<int> parent;
    std::vector<Move> via;
    std::vector<int> first;  // index into root moves
    std::unordered_map<Key, int> index;

    Key root;
    encode(q_.colors(), root);
    keys.push_back(root);
    parent.push_back(-1);
    via.push_back({});
    first.push_back(-1);
    index.emplace(root, 0);

    const int d0 = distinct(q_.colors(), k);
    if (d0 == 1) return {};
    const int upper = q_.vertex_count() - 1;
    int lower = d0 - 1;

    std::vector<Move> root_moves;
    std::vector<Color> colors;
    std::vector<Color> child;
    std::vector<char> present(k + 1);
    std::size_t layer_begin = 0;
    std::size_t layer_end = 1;
    int depth = 0;
    while (layer_begin < layer_end) {
      if (depth >= budget_.max_depth) {
        throw BudgetExceeded("depth budget of " + std::to_string(budget_.max_depth) + " exhausted",
                             lower);
      }
      int goal = -1;
      for (std::size_t s = layer_begin; s < layer_end; ++s) {
        decode(keys[s], colors);
        Blobs b = blobs_of(colors);
        std::fill(present.begin(), present.end(), 0);
        for (Color c : colors) present[c] = 1;
        for (int blob = 0; blob < static_cast<int>(b.rep.size()); ++blob) {
          const int rep = b.rep[blob];
          if (pivot_ && b.of[*pivot_] != blob) continue;
          const Color own = colors[rep];
          for (Color c = 1; c <= k; ++c) {
            if (!present[c] || c == own) continue;
            child = colors;
            for (int v = 0; v < static_cast<int>(child.size()); ++v) {
              if (b.of[v] == blob) child[v] = c;
            }
            const int d = distinct(child, k);
            if (depth + 1 + d - 1 > upper) continue;
            Key key;
            encode(child, key);
            const int move_first = s == 0 ? static_cast<int>(root_moves.size()) : first[s];
            if (s == 0) root_moves.push_back({rep, c});
            auto [it, fresh] = index.emplace(key, static_cast<int>(keys.size()));
            if (fresh) {
              keys.push_back(key);
              parent.push_back(static_cast<int>(s));
              via.push_back({rep, c});
              first.push_back(move_first);
              check_budget(static_cast<std::int64_t>(keys.size()), lower);
              if (d == 1) {
                if (goal < 0) goal = it->second;
                if (!want_first) return finish(goal, depth + 1, parent, via, first, root_moves);
              }
            } else if (static_cast<std::size_t>(it->second) >= layer_end) {
              first[it->second] = std::min(first[it->second], move_first);
            }
          }
        }
      }
      ++depth;
      lower = std::max(lower, depth);
      if (goal >= 0) {
        int best = goal;
        for (std::size_t s = layer_end; s < keys.size(); ++s) {
          decode(keys[s], colors);
          if (distinct(colors, k) == 1 && first[s] < first[best]) best = static_cast<int>(s);
        }
        return finish(best, depth, parent, via, first, root_moves);
      }
      layer_begin = layer_end;
      layer_end = keys.size();
    }
    throw BudgetExceeded("search space exhausted without reaching a monochrome state", lower);
  }

  static SearchResult finish(int goal, int opt, const std::vector<int>& parent,
                             const std::vector<Move>& via, const std::vector<int>& first,
                             const std::vector<Move>& root_moves) {
    SearchResult r;
    r.opt = opt;
    for (int s = goal; parent[s] >= 0; s = parent[s]) r.witness.push_back(via[s]);
    std::reverse(r.witness.begin(), r.witness.end());
    r.first = root_moves[first[goal]];
    return r;
  }

  const ColoredGraph& q_;
  std::optional<int> pivot_;
  SearchBudget budget_;
  int bits_;
  Clock::time_point start_;
  std::uint64_t ticks_ = 0;
};

Move lift(const GameState& state, const Move& m) {
  return {state.blob_representative(m.vertex), m.color};
}

}  // namespace

Solution solve_exact(const ColoredGraph& g, const Variant& variant, const SearchBudget& budget) {
  variant.validate(g);
  budget.validate();
  GameState state(g);
  Contraction c = contract(state);
  std::optional<int> pivot;
  if (variant.is_fixed()) pivot = c.vertex_to_quotient[*variant.pivot];
  SearchResult r = Searcher(c.quotient, pivot, budget).run(false);

  Solution out;
  out.opt = r.opt;
  for (const Move& m : r.witness) {
    Vertex v = variant.is_fixed() ? *variant.pivot : state.blob_representative(m.vertex);
    out.witness.push_back({v, m.color});
  }
  return out;
}

Hint hint(const GameState& state, const Variant& variant, const SearchBudget& budget) {
  variant.validate(state.graph());
  budget.validate();
  if (state.monochrome()) throw DomainError("state is already monochrome");
  Contraction c = contract(state);
  std::optional<int> pivot;
  if (variant.is_fixed()) pivot = c.vertex_to_quotient[*variant.pivot];
  try {
    SearchResult r = Searcher(c.quotient, pivot, budget).run(true);
    Move m = lift(state, r.first);
    if (variant.is_fixed()) m.vertex = *variant.pivot;
    return {m, r.opt, true};
  } catch (const BudgetExceeded& e) {
    Hint best;
    best.optimal = false;
    best.remaining_opt = e.best_lower_bound();
    int best_lower = std::numeric_limits<int>::max();
    std::vector<char> present(state.graph().k() + 1, 0);
    for (Color col : state.colors()) present[col] = 1;
    for (int blob = 0; blob < state.blob_count(); ++blob) {
      Vertex v = state.blob_representative(blob);
      if (variant.is_fixed() && state.blob_of(*variant.pivot) != blob) continue;
      for (Color col = 1; col <= state.graph().k(); ++col) {
        if (!present[col] || col == state.blob_color(blob)) continue;
        GameState next = state.apply({v, col});
        int lower = bounds(next).lower;
        if (lower < best_lower) {
          best_lower = lower;
          best.move = {variant.is_fixed() ? *variant.pivot : v, col};
        }
      }
    }
    return best;
  }
}

}  // namespace flood
