#include "flood/intervaldp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "flood/chordal.hpp"
#include "flood/errors.hpp"
#include "flood/mpq.hpp"

namespace flood {

int IntervalRepresentation::span() const {
  int p = 0;
  for (const auto& iv : intervals) p = std::max(p, iv.second);
  return p;
}

std::vector<Edge> IntervalRepresentation::edges() const {
  std::vector<Edge> out;
  const int n = vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (intervals[u].first <= intervals[v].second && intervals[v].first <= intervals[u].second) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

ColoredGraph IntervalRepresentation::graph() const {
  if (colors.size() != intervals.size()) throw InputError("one color per interval required");
  return ColoredGraph(k, colors, edges());
}

std::string proper_compact_violation(const IntervalRepresentation& rep) {
  const int n = rep.vertex_count();
  if (n == 0) return "no intervals";
  int lo = std::numeric_limits<int>::max();
  for (int v = 0; v < n; ++v) {
    const auto& [l, r] = rep.intervals[v];
    if (l > r) return "interval " + std::to_string(v) + " has L > R";
    lo = std::min(lo, l);
  }
  if (lo != 0) return "leftmost endpoint is not 0";
  const int p = rep.span();
  if (p > 2 * n - 1) return "span exceeds 2n - 1";
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const auto& a = rep.intervals[u];
      const auto& b = rep.intervals[v];
      if (a != b && a.first <= b.first && b.second <= a.second) {
        return "interval " + std::to_string(u) + " contains interval " + std::to_string(v);
      }
    }
  }
  auto at = [&](int x) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (rep.intervals[v].first <= x && x <= rep.intervals[v].second) s.push_back(v);
    }
    return s;
  };
  std::vector<int> prev = at(0);
  for (int x = 0; x < p; ++x) {
    std::vector<int> next = at(x + 1);
    if (prev.empty()) return "no interval covers point " + std::to_string(x);
    if (prev == next) return "points " + std::to_string(x) + " and " + std::to_string(x + 1) +
                             " are covered by the same intervals";
    prev = std::move(next);
  }
  if (!is_connected(make_adjacency(n, rep.edges()))) return "intersection graph is disconnected";
  return {};
}

bool is_proper_interval(const AdjacencyList& adj) {
  return is_interval(adj) && !find_claw(adj);
}

IntervalRepresentation build_representation(const ColoredGraph& g) {
  const AdjacencyList& adj = g.adjacency();
  MpqTree t = build_mpq(adj);
  if (auto claw = find_claw(adj)) {
    ForbiddenStructure w{ForbiddenStructure::Kind::claw, *claw};
    throw RecognitionError("graph is not a proper interval graph: " + w.describe(), w);
  }
  const int n = g.vertex_count();
  auto span = realize_intervals(t);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::tie(span[a].first, span[a].second, a) < std::tie(span[b].first, span[b].second, b);
  });

  // Closing index: the last vertex in the order that starts before i ends.
  std::vector<int> closes_after(n);
  for (int i = 0, j = 0; i < n; ++i) {
    j = std::max(j, i);
    while (j + 1 < n && span[order[j + 1]].first <= span[order[i]].second) ++j;
    closes_after[i] = j;
  }

  IntervalRepresentation rep;
  rep.k = g.k();
  rep.intervals.assign(n, {0, 0});
  rep.colors = g.colors();
  int point = -1;
  bool last_was_left = false;
  int next_close = 0;
  for (int j = 0; j < n; ++j) {
    rep.intervals[order[j]].first = ++point;
    last_was_left = true;
    while (next_close < n && closes_after[next_close] == j) {
      if (!last_was_left) ++point;
      rep.intervals[order[next_close]].second = point;
      last_was_left = false;
      ++next_close;
    }
  }
  return rep;
}

ColorSetPath build_colorset_path(const IntervalRepresentation& rep) {
  const int n = rep.vertex_count();
  if (n == 0) throw InputError("empty representation");
  int lo = std::numeric_limits<int>::max();
  for (const auto& iv : rep.intervals) lo = std::min(lo, iv.first);
  const int p = rep.span();
  ColorSetPath path;
  path.k = rep.k;
  for (int x = 2 * lo; x <= 2 * p; ++x) {
    // doubled coordinates: x even is an integer point, x odd the midpoint after it
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v) {
      if (2 * rep.intervals[v].first <= x && x <= 2 * rep.intervals[v].second) members.push_back(v);
    }
    if (members.empty()) {
      throw InputError("compactness violation: nothing covers point " + std::to_string(x / 2) +
                       (x % 2 ? ".5" : ""));
    }
    std::vector<Color> cs;
    for (Vertex v : members) cs.push_back(rep.colors[v]);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    path.sets.push_back(std::move(cs));
    path.provenance.push_back(std::move(members));
  }
  return path;
}

ColorSetPath recolor_path(const ColorSetPath& path, const std::vector<Color>& colors) {
  ColorSetPath out = path;
  for (std::size_t i = 0; i < path.provenance.size(); ++i) {
    std::vector<Color> cs;
    for (Vertex v : path.provenance[i]) cs.push_back(colors[v]);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    out.sets[i] = std::move(cs);
  }
  return out;
}

DpTable::DpTable(const ColorSetPath& path) {
  path.validate();
  for (const auto& s : path.sets) palette_.insert(palette_.end(), s.begin(), s.end());
  std::sort(palette_.begin(), palette_.end());
  palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
  d_ = static_cast<int>(palette_.size());
  if (d_ > max_colors) {
    throw CapacityError(std::to_string(d_) + " colors on the path; the DP supports at most " +
                        std::to_string(max_colors));
  }
  q_ = path.size();
  mask_.resize(q_);
  for (int i = 0; i < q_; ++i) {
    std::uint32_t m = 0;
    for (Color c : path.sets[i]) {
      m |= std::uint32_t{1} << (std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin());
    }
    mask_[i] = m;
  }
  row_.resize(q_);
  std::size_t pairs = 0;
  for (int l = 0; l < q_; ++l) {
    row_[l] = pairs;
    pairs += static_cast<std::size_t>(q_ - l);
  }
  win_.resize(pairs);
  for (int l = 0; l < q_; ++l) {
    std::uint32_t w = 0;
    for (int r = l; r < q_; ++r) {
      w |= mask_[r];
      win_[offset(l, r)] = w;
    }
  }
  stride_ = static_cast<std::size_t>(d_ + 3) << d_;
  // The fill keeps a column-major copy alongside.
  const double bytes = 2.0 * static_cast<double>(pairs) * static_cast<double>(stride_) * sizeof(std::uint16_t);
  if (bytes > static_cast<double>(max_table_bytes)) {
    throw CapacityError("DP table for " + std::to_string(q_) + " positions and " + std::to_string(d_) +
                        " colors needs " + std::to_string(static_cast<long long>(bytes / (1 << 20))) +
                        " MiB; the limit is " + std::to_string(max_table_bytes >> 20) + " MiB");
  }
  rec_.assign(pairs * stride_, 0);
  fill_table(*this);
}

int DpTable::best_other(int l, int r, std::uint32_t t, int c) const {
  if (r < l) return 0;
  const std::size_t o = offset(l, r);
  const std::uint16_t* p = &rec_[o * stride_];
  const std::size_t at = t & win_[o];
  return p[(static_cast<std::size_t>(d_ + 1) << d_) | at] == c ? p[(static_cast<std::size_t>(d_ + 2) << d_) | at]
                                                              : p[(static_cast<std::size_t>(d_) << d_) | at];
}

namespace {

constexpr int kInf = std::numeric_limits<std::uint16_t>::max();

// Calls fn(s) for every submask s of m, ascending.
template <class Fn>
void for_submasks(std::uint32_t m, Fn&& fn) {
  std::uint32_t s = 0;
  while (true) {
    fn(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace

// Best and second best over the colors of a record at mask t.
inline int best_other_in(const std::uint16_t* p, int d, std::uint32_t t, int c) {
  const std::size_t w = std::size_t{1} << d;
  return p[(d + 1) * w + t] == c ? p[(d + 2) * w + t] : p[d * w + t];
}

void fill_table(DpTable& t) {
  const int q = t.q_;
  const int d = t.d_;
  const std::size_t width = std::size_t{1} << d;
  const std::size_t stride = t.stride_;
  // Column-major copy so that the records of (i, r), i = l+1..r, are adjacent.
  std::vector<std::size_t> col(q);
  std::size_t pairs = 0;
  for (int r = 0; r < q; ++r) {
    col[r] = pairs;
    pairs += static_cast<std::size_t>(r + 1);
  }
  std::vector<std::uint16_t> mirror(pairs * stride, 0);
  std::vector<std::uint32_t> mirror_win(pairs, 0);
  std::uint16_t* rec = t.rec_.data();

  for (int l = q - 1; l >= 0; --l) {
    for (int r = l; r < q; ++r) {
      const std::size_t o = t.offset(l, r);
      const std::uint32_t w = t.win_[o];
      std::uint16_t* out = rec + o * stride;
      for (int c = 0; c < d; ++c) {
        const std::uint32_t cb = std::uint32_t{1} << c;
        std::uint16_t* row = out + (static_cast<std::size_t>(c) << d);
        for_submasks(w & ~cb, [&](std::uint32_t s) {
          int best;
          if (r == l) {
            int outside = std::popcount(t.mask_[l] & ~s & ~cb);
            best = std::max(outside, (t.mask_[l] & cb) ? 0 : 1);
          } else {
            best = kInf;
            const std::uint32_t sc = s | cb;
            for (int i = l + 1; i <= r; ++i) {
              const std::size_t lo = t.offset(l, i - 1);
              const std::uint16_t* lp = rec + lo * stride;
              const std::uint32_t lw = t.win_[lo];
              const std::size_t ro = col[r] + static_cast<std::size_t>(i);
              const std::uint16_t* rp = mirror.data() + ro * stride;
              const std::uint32_t rw = mirror_win[ro];
              const int left = lp[(static_cast<std::size_t>(c) << d) | (s & lw)];
              const int right = rp[(static_cast<std::size_t>(c) << d) | (s & rw)];
              best = std::min(best, left + right);
              best = std::min(best, left + best_other_in(rp, d, sc & rw, c) + 1);
              best = std::min(best, best_other_in(lp, d, sc & lw, c) + 1 + right);
            }
          }
          row[s] = static_cast<std::uint16_t>(best);
        });
      }
      // best and second best backbone color per leftover mask
      for_submasks(w, [&](std::uint32_t s) {
        int b1 = kInf;
        int b1c = 0;
        int b2 = kInf;
        for (int c = 0; c < d; ++c) {
          const int v = out[(static_cast<std::size_t>(c) << d) | (s & ~(1u << c))];
          if (v < b1) {
            b2 = b1;
            b1 = v;
            b1c = c;
          } else if (v < b2) {
            b2 = v;
          }
        }
        out[d * width + s] = static_cast<std::uint16_t>(b1);
        out[(d + 1) * width + s] = static_cast<std::uint16_t>(b1c);
        out[(d + 2) * width + s] = static_cast<std::uint16_t>(b2);
      });
      const std::size_t mo = col[r] + static_cast<std::size_t>(l);
      std::copy(out, out + stride, mirror.begin() + static_cast<std::ptrdiff_t>(mo * stride));
      mirror_win[mo] = w;
    }
  }
}

DpResult dp_solve(const ColorSetPath& path) {
  DpResult res;
  res.table = DpTable(path);
  const DpTable& t = res.table;
  const int q = t.positions();
  const std::uint32_t w = t.window(0, q - 1);
  int best = kInf;
  for (int c = 0; c < t.color_count(); ++c) {
    for_submasks(w & ~(std::uint32_t{1} << c), [&](std::uint32_t s) {
      int v = t.f(0, q - 1, c, s) + std::popcount(s);
      if (v < best) {
        best = v;
        res.best_color = c;
        res.best_set = s;
      }
    });
  }
  res.opt = best;
  return res;
}

int dp_value(const ColorSetPath& path) { return dp_solve(path).opt; }

namespace {

class Replayer {
 public:
  Replayer(const DpTable& t, const ColorSetPath& path, GameState state)
      : t_(t), path_(path), state_(std::move(state)) {}

  void run(int l, int r, int c, std::uint32_t s) {
    if (l == r) {
      base(l, c, s);
      return;
    }
    const int target = t_.f(l, r, c, s);
    const std::uint32_t sc = s | (std::uint32_t{1} << c);
    for (int i = l + 1; i <= r; ++i) {
      const int left = t_.f(l, i - 1, c, s);
      const int right = t_.f(i, r, c, s);
      if (left + right == target) {
        run(l, i - 1, c, s);
        run(i, r, c, s);
        return;
      }
      for (int c2 = 0; c2 < t_.color_count(); ++c2) {
        if (c2 == c) continue;
        if (left + t_.f(i, r, c2, sc) + 1 == target) {
          run(l, i - 1, c, s);
          run(i, r, c2, sc);
          join(i, c2, c);
          return;
        }
        if (t_.f(l, i - 1, c2, sc) + 1 + right == target) {
          run(l, i - 1, c2, sc);
          run(i, r, c, s);
          join(i - 1, c2, c);
          return;
        }
      }
    }
    ok_ = false;
  }

  void leftovers(int c, std::uint32_t s) {
    Color backbone = t_.palette()[c];
    Vertex v = find(0, backbone);
    if (v < 0) {
      ok_ = false;
      return;
    }
    for (int x = 0; x < t_.color_count(); ++x) {
      if (!(s >> x & 1)) continue;
      Color col = t_.palette()[x];
      if (std::find(state_.colors().begin(), state_.colors().end(), col) == state_.colors().end()) {
        continue;
      }
      play({v, col});
    }
  }

  bool ok() const { return ok_; }
  const GameState& state() const { return state_; }
  const std::vector<Move>& moves() const { return moves_; }

 private:
  Vertex find(int pos, Color col) const {
    for (Vertex v : path_.provenance[pos]) {
      if (state_.color(v) == col) return v;
    }
    return -1;
  }

  std::uint32_t current_mask(int pos) const {
    std::uint32_t m = 0;
    for (Vertex v : path_.provenance[pos]) {
      auto it = std::lower_bound(t_.palette().begin(), t_.palette().end(), state_.color(v));
      if (it != t_.palette().end() && *it == state_.color(v)) {
        m |= std::uint32_t{1} << (it - t_.palette().begin());
      }
    }
    return m;
  }

  void play(const Move& m) {
    state_ = state_.apply(m);
    moves_.push_back(m);
  }

  void base(int pos, int c, std::uint32_t s) {
    const std::uint32_t cb = std::uint32_t{1} << c;
    const Color target = t_.palette()[c];
    std::uint32_t cur = current_mask(pos);
    if (!(cur & cb)) {
      std::uint32_t pick = cur & ~s;
      if (!pick) pick = cur;
      if (!pick) {
        ok_ = false;
        return;
      }
      Vertex v = find(pos, t_.palette()[std::countr_zero(pick)]);
      play({v, target});
      cur = current_mask(pos);
    }
    while (std::uint32_t extra = cur & ~s & ~cb) {
      Vertex v = find(pos, t_.palette()[std::countr_zero(extra)]);
      play({v, target});
      cur = current_mask(pos);
    }
  }

  void join(int pos, int from, int to) {
    Vertex v = find(pos, t_.palette()[from]);
    if (v < 0) {
      ok_ = false;
      return;
    }
    play({v, t_.palette()[to]});
  }

  const DpTable& t_;
  const ColorSetPath& path_;
  GameState state_;
  std::vector<Move> moves_;
  bool ok_ = true;
};

std::optional<std::vector<Move>> replay(const DpResult& dp, const ColorSetPath& path,
                                        const GameState& state) {
  Replayer rp(dp.table, path, state);
  rp.run(0, dp.table.positions() - 1, dp.best_color, dp.best_set);
  if (rp.ok()) rp.leftovers(dp.best_color, dp.best_set);
  if (rp.ok() && rp.state().monochrome() && static_cast<int>(rp.moves().size()) == dp.opt) {
    return rp.moves();
  }
  if (!rp.moves().empty()) return std::vector<Move>{rp.moves().front()};
  return std::vector<Move>{};
}

// Replans from the current board after every move; a move is kept only when
// the DP optimum of the resulting board drops by one.
std::optional<std::vector<Move>> descend(const ColorSetPath& path, const ColoredGraph& g, int opt) {
  GameState state(g);
  std::vector<Move> moves;
  int cur = opt;
  while (cur > 0) {
    const ColorSetPath here = recolor_path(path, state.colors());
    const DpResult dp = dp_solve(here);
    if (dp.opt != cur) return std::nullopt;
    std::vector<Move> plan = *replay(dp, here, state);
    if (static_cast<int>(plan.size()) == cur) {
      moves.insert(moves.end(), plan.begin(), plan.end());
      return moves;
    }
    std::vector<Move> candidates = plan;
    std::vector<char> present(g.k() + 1, 0);
    for (Color c : state.colors()) present[c] = 1;
    for (int b = 0; b < state.blob_count(); ++b) {
      for (Color c = 1; c <= g.k(); ++c) {
        if (present[c] && c != state.blob_color(b)) candidates.push_back({state.blob_representative(b), c});
      }
    }
    bool found = false;
    for (const Move& m : candidates) {
      GameState next = state.apply(m);
      if (dp_value(recolor_path(path, next.colors())) == cur - 1) {
        state = std::move(next);
        moves.push_back(m);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
    --cur;
  }
  return moves;
}

}  // namespace

std::vector<Move> reconstruct_witness(const DpResult& dp, const ColorSetPath& path,
                                      const ColoredGraph& g) {
  if (path.provenance.size() != path.sets.size()) {
    throw InputError("witness reconstruction needs vertex provenance for every position");
  }
  if (dp.opt == 0) return {};
  if (auto moves = replay(dp, path, GameState(g)); moves && static_cast<int>(moves->size()) == dp.opt) {
    return *moves;
  }
  // Backtracking diverged from the board.
  if (auto moves = descend(path, g, dp.opt)) return *moves;
  throw WitnessGap("no move sequence of length " + std::to_string(dp.opt) +
                       " follows the DP choices on this board",
                   dp.opt);
}

Solution solve_proper_interval(const ColoredGraph& g) {
  IntervalRepresentation rep = build_representation(g);
  ColorSetPath path = build_colorset_path(rep);
  DpResult dp = dp_solve(path);
  return {dp.opt, reconstruct_witness(dp, path, g)};
}

}  // namespace flood
