#include <gtest/gtest.h>

#include <algorithm>

#include "flood/errors.hpp"
#include "flood/intervaldp.hpp"
#include "flood/oracle.hpp"
#include "support/brute.hpp"
#include "support/generators.hpp"
#include "support/literal_dp.hpp"

using namespace flood;
namespace ft = flood::testing;

namespace {

ColorSetPath abstract_path(std::vector<std::vector<Color>> sets, int k) {
  ColorSetPath p;
  p.k = k;
  p.sets = std::move(sets);
  return p;
}

}  // namespace

TEST(Representation, CompleteGraphOnTwo) {
  auto rep = build_representation(ColoredGraph(2, {1, 2}, {{0, 1}}));
  EXPECT_EQ(rep.intervals, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(proper_compact_violation(rep), "");
  auto path = build_colorset_path(rep);
  EXPECT_EQ(path.sets, std::vector<std::vector<Color>>({{1}, {1}, {1, 2}, {2}, {2}}));
}

TEST(Representation, ClawIsRejected) {
  ColoredGraph star(1, {1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  try {
    build_representation(star);
    FAIL();
  } catch (const RecognitionError& e) {
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->kind, ForbiddenStructure::Kind::claw);
    EXPECT_EQ(e.witness()->vertices, std::vector<Vertex>({0, 1, 2, 3}));
  }
  EXPECT_THROW(build_representation(ColoredGraph(1, {1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})),
               RecognitionError);
}

TEST(Representation, PathOfThree) {
  ColoredGraph g(3, {1, 2, 3}, {{0, 1}, {1, 2}});
  auto rep = build_representation(g);
  EXPECT_EQ(proper_compact_violation(rep), "");
  EXPECT_EQ(rep.edges(), g.edges());
  auto path = build_colorset_path(rep);
  EXPECT_EQ(path.size(), 2 * rep.span() + 1);
}

TEST(Representation, ValidatorCatchesViolations) {
  IntervalRepresentation rep{2, {{0, 3}, {1, 2}}, {1, 2}};
  EXPECT_NE(proper_compact_violation(rep), "");
  IntervalRepresentation gap{1, {{0, 0}, {2, 2}}, {1, 1}};
  EXPECT_NE(proper_compact_violation(gap), "");
  IntervalRepresentation flat{1, {{0, 1}, {0, 1}}, {1, 1}};
  EXPECT_NE(proper_compact_violation(flat), "");
  IntervalRepresentation twins{1, {{0, 0}, {0, 0}}, {1, 1}};
  EXPECT_EQ(proper_compact_violation(twins), "");
}

TEST(ColorsetPath, MonochromeRepresentation) {
  auto rep = build_representation(ColoredGraph(4, {4, 4, 4}, {{0, 1}, {1, 2}}));
  for (const auto& s : build_colorset_path(rep).sets) EXPECT_EQ(s, std::vector<Color>({4}));
}

TEST(ColorsetPath, EmptySampleIsRejected) {
  IntervalRepresentation gap{1, {{0, 0}, {2, 2}}, {1, 1}};
  EXPECT_THROW(build_colorset_path(gap), InputError);
}

TEST(DpSolve, Examples) {
  EXPECT_EQ(dp_solve(abstract_path({{1}}, 1)).opt, 0);
  EXPECT_EQ(dp_solve(abstract_path({{1}, {1}, {1, 2}, {2}, {2}}, 2)).opt, 1);
  auto p5 = ft::path_graph({1, 2, 1, 2, 1});
  EXPECT_EQ(dp_solve(build_colorset_path(build_representation(p5))).opt, 2);
}

TEST(DpSolve, RejectsTooManyColors) {
  std::vector<std::vector<Color>> sets;
  for (int c = 1; c <= 25; ++c) sets.push_back({c});
  EXPECT_THROW(dp_solve(abstract_path(sets, 25)), CapacityError);
}

TEST(SolveProperInterval, Examples) {
  auto k2 = ColoredGraph(2, {1, 2}, {{0, 1}});
  auto s = solve_proper_interval(k2);
  EXPECT_EQ(s.opt, 1);
  ASSERT_EQ(s.witness.size(), 1u);
  EXPECT_TRUE(verify_solution(k2, {}, s.witness).valid);

  auto p5 = ft::path_graph({1, 2, 1, 2, 1});
  auto w = solve_proper_interval(p5);
  EXPECT_EQ(w.opt, 2);
  EXPECT_TRUE(verify_solution(p5, {}, w.witness).valid);

  EXPECT_EQ(solve_proper_interval(ColoredGraph(3, {3, 3, 3}, {{0, 1}, {1, 2}, {0, 2}})).opt, 0);
}

class DpProperties : public ::testing::TestWithParam<int> {};

TEST_P(DpProperties, TableMatchesLiteralRecurrence) {
  ft::Rng rng(GetParam());
  int q = ft::uniform(rng, 1, 7);
  int k = ft::uniform(rng, 1, 3);
  std::vector<std::vector<Color>> sets;
  for (int i = 0; i < q; ++i) {
    std::vector<Color> s;
    for (Color c = 1; c <= k; ++c) {
      if (ft::uniform(rng, 0, 2) == 0) s.push_back(c);
    }
    if (s.empty()) s.push_back(ft::uniform(rng, 1, k));
    sets.push_back(s);
  }
  auto path = abstract_path(sets, k);
  auto dp = dp_solve(path);
  ft::LiteralDp lit(path);
  const int d = dp.table.color_count();
  ASSERT_EQ(d, lit.colors());
  for (int l = 0; l < q; ++l) {
    for (int r = l; r < q; ++r) {
      for (int c = 0; c < d; ++c) {
        for (std::uint32_t s = 0; s < (1u << d); ++s) {
          ASSERT_EQ(dp.table.f(l, r, c, s), lit.f(l, r, c, s)) << l << " " << r << " " << c << " " << s;
          // shrinking S never lowers f
          for (int x = 0; x < d; ++x) {
            if (s >> x & 1) EXPECT_GE(dp.table.f(l, r, c, s & ~(1u << x)), dp.table.f(l, r, c, s));
          }
        }
      }
    }
  }
  EXPECT_EQ(dp.opt, lit.opt());
  EXPECT_EQ(dp_solve(path.reversed()).opt, dp.opt);

  // zero cost exactly when c covers the range and the rest fits in S
  for (int c = 0; c < d; ++c) {
    std::uint32_t all = dp.table.window(0, q - 1);
    bool covered = true;
    for (int i = 0; i < q; ++i) covered = covered && (dp.table.mask_at(i) >> c & 1);
    EXPECT_EQ(dp.table.f(0, q - 1, c, all) == 0, covered);
  }
}

TEST_P(DpProperties, ProperIntervalMatchesOracle) {
  ft::Rng rng(1000 + GetParam());
  int n = ft::uniform(rng, 1, 9);
  int k = ft::uniform(rng, 1, 4);
  auto reach = ft::random_reach(rng, n);
  ColoredGraph g(k, ft::random_colors(rng, n, k), ft::reach_edges(reach));
  auto rep = build_representation(g);
  ASSERT_EQ(proper_compact_violation(rep), "");
  EXPECT_EQ(rep.edges(), g.edges());
  auto path = build_colorset_path(rep);
  EXPECT_EQ(path.size(), 2 * rep.span() + 1);
  for (int i = 0; i + 2 < path.size(); i += 2) {
    for (Color c : path.sets[i + 1]) {
      EXPECT_TRUE(std::binary_search(path.sets[i].begin(), path.sets[i].end(), c));
      EXPECT_TRUE(std::binary_search(path.sets[i + 2].begin(), path.sets[i + 2].end(), c));
    }
  }
  auto s = solve_proper_interval(g);
  EXPECT_EQ(s.opt, solve_exact(g).opt);
  auto r = verify_solution(g, {}, s.witness);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.length, s.opt);
}

INSTANTIATE_TEST_SUITE_P(Seeds, DpProperties, ::testing::Range(0, 200));
