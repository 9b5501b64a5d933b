#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "flood/errors.hpp"
#include "flood/game.hpp"
#include "support/generators.hpp"
#include "support/naive_oracle.hpp"

using namespace flood;
using flood::testing::gadget_graph;
using flood::testing::path_graph;

namespace {

std::set<std::vector<Vertex>> partition_of(const GameState& s) {
  auto b = s.blobs();
  return {b.begin(), b.end()};
}

}  // namespace

TEST(ColoredGraph, RejectsMalformedBoards) {
  EXPECT_THROW(ColoredGraph(2, {1, 3}, {{0, 1}}), InputError);
  EXPECT_THROW(ColoredGraph(2, {1, 2}, {{0, 0}}), InputError);
  EXPECT_THROW(ColoredGraph(2, {1, 2}, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(ColoredGraph(2, {1, 2, 1}, {{0, 1}}), InputError);
  EXPECT_THROW(ColoredGraph(2, {1, 2}, {{0, 2}}), InputError);
  EXPECT_THROW(ColoredGraph(0, {}, {}), InputError);
}

TEST(ColoredGraph, AllowsMonochromeEdgesAndUnusedColors) {
  ColoredGraph g(5, {1, 1, 2}, {{1, 0}, {1, 2}});
  EXPECT_EQ(g.distinct_colors(), 2);
  EXPECT_EQ(g.edges().front(), Edge(0, 1));
  EXPECT_EQ(g.color_mask(), 0b11u);
}

TEST(FloodNeighborhood, PathExamples) {
  GameState s(path_graph({1, 2, 1}));
  EXPECT_EQ(flood_neighborhood(s, 1, 2), std::vector<Vertex>({1}));
  EXPECT_EQ(flood_neighborhood(s, 0, 2), std::vector<Vertex>({1}));
  EXPECT_EQ(flood_neighborhood(s, 0, 1), std::vector<Vertex>({0}));
  EXPECT_THROW(flood_neighborhood(s, 3, 1), InputError);
  EXPECT_THROW(flood_neighborhood(s, 0, 3), InputError);
}

TEST(FloodNeighborhood, EmptyWhenNothingToAbsorb) {
  GameState s(ColoredGraph(3, {1, 2}, {{0, 1}}));
  EXPECT_TRUE(flood_neighborhood(s, 0, 3).empty());
}

TEST(FloodNeighborhood, MonochromeTriangle) {
  GameState s(ColoredGraph(1, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(flood_neighborhood(s, v, 1).size(), 3u);
}

TEST(ApplyMove, SameColorOnlyExtendsHistory) {
  GameState s(path_graph({1, 2, 1}));
  GameState t = s.apply({1, 2});
  EXPECT_EQ(t.colors(), s.colors());
  EXPECT_EQ(partition_of(t), partition_of(s));
  EXPECT_EQ(t.history().size(), 1u);
}

TEST(ApplyMove, PathMergesIntoOneBlob) {
  GameState s = GameState(path_graph({1, 2, 1})).apply({1, 1});
  EXPECT_TRUE(s.monochrome());
  EXPECT_EQ(s.distinct_colors(), 1);
}

TEST(ApplyMove, FixedVariantRejectsOtherVertices) {
  GameState s(path_graph({1, 2, 1}));
  auto fixed = Variant::fixed_game(0);
  EXPECT_THROW(s.apply({1, 1}, fixed), VariantViolation);
  EXPECT_NO_THROW(s.apply({0, 2}, fixed));
}

TEST(ApplyMove, GadgetFourMoveSequence) {
  auto g = gadget_graph();
  // b3 is vertex 2, h4 is vertex 7; colors b=1, e=2, u=4.
  std::vector<Move> moves{{2, 4}, {2, 2}, {2, 1}, {7, 1}};
  GameState s(g);
  for (const auto& m : moves) s = s.apply(m);
  EXPECT_TRUE(s.monochrome());
  EXPECT_EQ(s.color(0), 1);
  auto r = verify_solution(g, Variant::free_game(), moves);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.length, 4);
  EXPECT_EQ(r.final_color, 1);
}

TEST(VerifySolution, GadgetHasNoThreeMoveSolution) {
  auto g = gadget_graph();
  std::vector<Move> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Color c = 1; c <= g.k(); ++c) all.push_back({v, c});
  }
  int valid = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        std::vector<Move> seq{a, b, c};
        if (verify_solution(g, {}, seq).valid) ++valid;
      }
    }
  }
  EXPECT_EQ(valid, 0);
}

TEST(VerifySolution, ReportsFirstViolation) {
  auto g = path_graph({1, 2, 1});
  auto r = verify_solution(g, Variant::fixed_game(0), std::vector<Move>{{0, 2}, {1, 1}});
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.first_violation, 1);
  auto empty = verify_solution(ColoredGraph(1, {1}, {}), {}, {});
  EXPECT_TRUE(empty.valid);
  EXPECT_EQ(empty.length, 0);
  auto truncated = verify_solution(g, {}, std::vector<Move>{});
  EXPECT_FALSE(truncated.valid);
  EXPECT_EQ(truncated.first_violation, 0);
  auto bad_pivot = verify_solution(g, Variant::fixed_game(7), {});
  EXPECT_FALSE(bad_pivot.valid);
}

TEST(Contract, Examples) {
  auto q = contract(path_graph({1, 2, 2, 1}));
  EXPECT_EQ(q.quotient.colors(), std::vector<Color>({1, 2, 1}));
  EXPECT_EQ(q.quotient.edge_count(), 2);
  EXPECT_EQ(q.vertex_to_quotient, std::vector<int>({0, 1, 1, 2}));
  auto mono = contract(ColoredGraph(3, {2, 2, 2}, {{0, 1}, {1, 2}}));
  EXPECT_EQ(mono.quotient.vertex_count(), 1);
}

TEST(Bounds, Examples) {
  auto b = bounds(path_graph({1, 2, 1}));
  EXPECT_EQ(b.lower, 1);
  EXPECT_EQ(b.upper, 2);
  auto m = bounds(ColoredGraph(1, {1, 1}, {{0, 1}}));
  EXPECT_EQ(m.lower, 0);
  EXPECT_EQ(m.upper, 0);
}

class CoreProperties : public ::testing::TestWithParam<int> {};

TEST_P(CoreProperties, BlobInvariantsUnderRandomPlay) {
  flood::testing::Rng rng(GetParam());
  int n = flood::testing::uniform(rng, 1, 12);
  int k = flood::testing::uniform(rng, 1, 4);
  auto g = std::make_shared<const ColoredGraph>(flood::testing::random_graph(rng, n, k, 0.25));
  GameState s(g);
  std::vector<Color> raw = g->colors();
  for (int step = 0; step < 10; ++step) {
    Move m{flood::testing::uniform(rng, 0, n - 1), flood::testing::uniform(rng, 1, k)};
    GameState t = s.apply(m);
    raw = flood::testing::naive_move(*g, raw, m.vertex, m.color);
    EXPECT_EQ(t.colors(), raw);

    // blobs are monochrome, connected, maximal
    for (const auto& blob : t.blobs()) {
      for (Vertex v : blob) EXPECT_EQ(t.color(v), t.color(blob[0]));
    }
    for (const auto& [u, v] : g->edges()) {
      EXPECT_EQ(t.color(u) == t.color(v), t.blob_of(u) == t.blob_of(v));
    }
    // coarsening: vertices together before stay together
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (s.blob_of(u) == s.blob_of(v)) EXPECT_EQ(t.blob_of(u), t.blob_of(v));
      }
    }
    bool present = std::find(s.colors().begin(), s.colors().end(), m.color) != s.colors().end();
    if (present) EXPECT_LE(t.distinct_colors(), s.distinct_colors());
    EXPECT_GE(t.distinct_colors(), s.distinct_colors() - 1);

    // contraction commutes with moves
    auto q = contract(s);
    GameState qs(q.quotient);
    auto via_quotient = contract(qs.apply({q.vertex_to_quotient[m.vertex], m.color}));
    EXPECT_EQ(via_quotient.quotient, contract(t).quotient);

    s = t;
  }
  GameState replayed = GameState::replay(g, s.history());
  EXPECT_EQ(replayed.colors(), s.colors());
  EXPECT_EQ(partition_of(replayed), partition_of(s));
}

TEST_P(CoreProperties, BoundsEnvelopeAndFreeBeatsFixed) {
  flood::testing::Rng rng(1000 + GetParam());
  int n = flood::testing::uniform(rng, 1, 6);
  int k = flood::testing::uniform(rng, 1, 3);
  auto g = flood::testing::random_graph(rng, n, k, 0.3);
  int opt = flood::testing::naive_opt(g);
  auto b = bounds(g);
  EXPECT_LE(b.lower, opt);
  EXPECT_LE(opt, b.upper);
  for (Vertex p = 0; p < n; ++p) EXPECT_LE(opt, flood::testing::naive_opt(g, p));
}

INSTANTIATE_TEST_SUITE_P(Seeds, CoreProperties, ::testing::Range(0, 60));
