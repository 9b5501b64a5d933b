#include <gtest/gtest.h>

#include "flood/errors.hpp"
#include "flood/oracle.hpp"
#include "flood/split.hpp"
#include "support/brute.hpp"
#include "support/generators.hpp"

using namespace flood;
using flood::testing::Rng;

namespace {

ColoredGraph star(std::vector<Color> colors) {
  std::vector<Edge> edges;
  for (int v = 1; v < static_cast<int>(colors.size()); ++v) edges.emplace_back(0, v);
  int k = *std::max_element(colors.begin(), colors.end());
  return ColoredGraph(k, std::move(colors), std::move(edges));
}

// All (K, I) partitions by bitmask.
std::vector<SplitDecomposition> all_decompositions(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<SplitDecomposition> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    SplitDecomposition d;
    for (int v = 0; v < n; ++v) (mask >> v & 1 ? d.clique : d.independent).push_back(v);
    bool ok = true;
    for (Vertex a : d.clique)
      for (Vertex b : d.clique)
        if (a < b && !adjacent(adj, a, b)) ok = false;
    for (Vertex a : d.independent)
      for (Vertex b : d.independent)
        if (a < b && adjacent(adj, a, b)) ok = false;
    if (ok) out.push_back(d);
  }
  return out;
}

SplitDecomposition brute_canonical(const AdjacencyList& adj) {
  auto all = all_decompositions(adj);
  std::size_t best = 0;
  for (const auto& d : all) best = std::max(best, d.clique.size());
  std::vector<SplitDecomposition> top;
  for (const auto& d : all)
    if (d.clique.size() == best) top.push_back(d);
  return *std::min_element(top.begin(), top.end(), [](const auto& a, const auto& b) {
    return a.clique < b.clique;
  });
}

}  // namespace

TEST(RecognizeSplit, TriangleIsAllClique) {
  auto d = recognize_split(ColoredGraph(1, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(d.clique, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(d.independent.empty());
}

TEST(RecognizeSplit, FourCycleIsRejected) {
  auto g = ColoredGraph(1, {1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  try {
    recognize_split(g);
    FAIL() << "C4 accepted";
  } catch (const RecognitionError& e) {
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->kind, ForbiddenStructure::Kind::not_split);
    EXPECT_EQ(e.witness()->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  }
}

TEST(RecognizeSplit, FiveCycleWitness) {
  auto g = ColoredGraph(1, {1, 1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  try {
    recognize_split(g);
    FAIL() << "C5 accepted";
  } catch (const RecognitionError& e) {
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->vertices.size(), 5u);
  }
}

TEST(RecognizeSplit, StarTakesCenterAndFirstLeaf) {
  auto g = star({1, 2, 2, 2});
  auto d = recognize_split(g);
  EXPECT_EQ(d.clique, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(d.independent, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(d, brute_canonical(g.adjacency()));
}

TEST(RecognizeSplit, SingleVertex) {
  auto d = recognize_split(ColoredGraph(1, {1}, {}));
  EXPECT_EQ(d.clique, (std::vector<Vertex>{0}));
}

TEST(RecognizeSplit, MatchesBruteForceCanonicalChoice) {
  for (int seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    int n = flood::testing::uniform(rng, 1, 9);
    auto g = flood::testing::random_split(rng, n, 2);
    ASSERT_EQ(recognize_split(g), brute_canonical(g.adjacency())) << "seed " << seed;
  }
}

TEST(RecognizeSplit, AgreesWithBruteForceOnArbitraryGraphs) {
  for (int seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    int n = flood::testing::uniform(rng, 1, 8);
    auto g = flood::testing::random_graph(rng, n, 2, 0.4);
    bool brute = !all_decompositions(g.adjacency()).empty();
    ASSERT_EQ(is_split(g.adjacency()), brute) << "seed " << seed;
    if (brute) ASSERT_EQ(recognize_split(g), brute_canonical(g.adjacency())) << "seed " << seed;
  }
}

TEST(SolveSplit, Monochrome) {
  auto s = solve_split(star({1, 1, 1}));
  EXPECT_EQ(s.opt, 0);
  EXPECT_TRUE(s.witness.empty());
}

TEST(SolveSplit, EdgeWithPendant) {
  // K = {a:1, b:2}, I = {x:3} adjacent to a
  auto g = ColoredGraph(3, {1, 2, 3}, {{0, 1}, {0, 2}});
  auto s = solve_split(g);
  EXPECT_EQ(s.opt, 2);
  EXPECT_EQ(s.opt, solve_exact(g).opt);
  EXPECT_TRUE(verify_solution(g, {}, s.witness).valid);
}

TEST(SolveSplit, StarWithTwoLeafColors) {
  auto g = star({1, 2, 3});
  auto s = solve_split(g);
  EXPECT_EQ(s.opt, 2);
  EXPECT_EQ(s.opt, bounds(g).lower);
  EXPECT_TRUE(verify_solution(g, {}, s.witness).valid);
}

TEST(SolveSplit, RejectsNonSplit) {
  auto g = ColoredGraph(2, {1, 2, 1, 2}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_THROW(solve_split(g), RecognitionError);
}

TEST(SolveSplit, WarnsAtLargePalette) {
  std::vector<std::string> warnings;
  solve_split(star({1, 8}), {}, &warnings);
  EXPECT_EQ(warnings.size(), 1u);
  warnings.clear();
  solve_split(star({1, 7}), {}, &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(SolveSplit, BudgetIsEnforced) {
  Rng rng(7);
  auto g = ColoredGraph(6, flood::testing::random_colors(rng, 12, 6),
                        flood::testing::random_split_edges(rng, 12, 6));
  SearchBudget tiny;
  tiny.max_states = 3;
  EXPECT_THROW(solve_split(g, tiny), BudgetExceeded);
}

TEST(SolveSplitProperty, MatchesOracleAndBounds) {
  for (int seed = 0; seed < 500; ++seed) {
    Rng rng(1000 + seed);
    int n = flood::testing::uniform(rng, 1, 10);
    int k = flood::testing::uniform(rng, 1, 4);
    auto g = flood::testing::random_split(rng, n, k);
    auto s = solve_split(g);
    auto exact = solve_exact(g);
    ASSERT_EQ(s.opt, exact.opt) << "seed " << seed;
    ASSERT_LE(s.opt, 2 * k) << "seed " << seed;
    ASSERT_GE(s.opt, bounds(g).lower) << "seed " << seed;
    auto r = verify_solution(g, {}, s.witness);
    ASSERT_TRUE(r.valid) << "seed " << seed << ": " << r.reason;
    ASSERT_EQ(r.length, s.opt);
    auto d = recognize_split(g);
    for (const Move& m : s.witness) {
      ASSERT_TRUE(std::binary_search(d.clique.begin(), d.clique.end(), m.vertex)) << "seed " << seed;
    }
  }
}
