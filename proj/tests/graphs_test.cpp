#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bichrom/graphs.hpp"

namespace bichrom {
namespace {

TriangleGraph relabel(const TriangleGraph& g, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.push_back(make_edge(perm[u], perm[v]));
  return TriangleGraph(g.n(), e);
}

TwoTreeSeq random_seq(int n, std::mt19937& rng) {
  TwoTreeSeq s{n, {}};
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int w = 3; w < n; ++w) {
    auto e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    s.attachments.push_back(e);
    edges.push_back({e.first, w});
    edges.push_back({e.second, w});
  }
  return s;
}

TEST(BuildTheta, Shapes) {
  auto k3 = build_theta(3);
  EXPECT_EQ(k3.edges().size(), 3u);
  ASSERT_EQ(k3.triangles().size(), 1u);
  auto t5 = build_theta(5);
  EXPECT_EQ(t5.n(), 5);
  EXPECT_EQ(t5.edges().size(), 7u);
  EXPECT_EQ(t5.triangles().size(), 3u);
  for (const auto& t : t5.triangles()) EXPECT_TRUE(t[0] == 0 && t[1] == 1);
  EXPECT_EQ(build_theta(4).triangles().size(), 2u);
  EXPECT_THROW(build_theta(2), std::invalid_argument);
}

TEST(BuildFan, Shapes) {
  EXPECT_TRUE(is_isomorphic(build_fan(3), build_theta(3)));
  EXPECT_EQ(build_fan(4).triangles().size(), 2u);
  EXPECT_EQ(degree_sequence(build_fan(6)), (std::vector<int>{5, 3, 3, 3, 2, 2}));
  const auto fan9 = build_fan(9);
  for (const auto& t : fan9.triangles()) EXPECT_EQ(t[0], 0);
  EXPECT_THROW(build_fan(1), std::invalid_argument);
}

TEST(DegreeSequence, Examples) {
  EXPECT_EQ(degree_sequence(build_theta(6)), (std::vector<int>{5, 5, 2, 2, 2, 2}));
  EXPECT_EQ(degree_sequence(build_theta(3)), (std::vector<int>{2, 2, 2}));
}

TEST(TrianglesOf, ListsCliquesInOrder) {
  EXPECT_EQ(triangles_of(3, {{0, 1}, {1, 2}, {0, 2}}), (std::vector<Triangle>{{0, 1, 2}}));
  EXPECT_TRUE(triangles_of(4, {{0, 1}, {1, 2}, {2, 3}}).empty());
  // K4 has four triangles
  EXPECT_EQ(triangles_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
            (std::vector<Triangle>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

TEST(TwoTreeCounts, EdgesAndTrianglesForAllBuilders) {
  std::mt19937 rng(7);
  for (int n = 3; n <= 40; ++n) {
    for (const auto& g : {build_theta(n), build_fan(n), build_two_tree(random_seq(n, rng))}) {
      EXPECT_EQ(g.edges().size(), static_cast<std::size_t>(2 * n - 3));
      EXPECT_EQ(g.triangles().size(), static_cast<std::size_t>(n - 2));
      for (const auto& t : g.triangles())
        EXPECT_TRUE(g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2]));
    }
  }
}

TEST(BuildTwoTree, ReplaysCanonicalSequences) {
  EXPECT_EQ(build_two_tree({3, {}}), build_theta(3));
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(build_two_tree(theta_seq(n)), build_theta(n));
    EXPECT_TRUE(is_isomorphic(build_two_tree(fan_seq(n)), build_fan(n))) << n;
  }
}

TEST(BuildTwoTree, RejectsBadAttachments) {
  EXPECT_THROW(build_two_tree({5, {{0, 1}}}), std::invalid_argument);          // wrong count
  EXPECT_THROW(build_two_tree({4, {{0, 3}}}), std::invalid_argument);          // vertex 3 not yet present
  EXPECT_THROW(build_two_tree({5, {{0, 1}, {2, 3}}}), std::invalid_argument);  // 2-3 is not an edge
  EXPECT_THROW(build_two_tree({4, {{1, 1}}}), std::invalid_argument);
}

TEST(ParseTwoTreeSeq, GrammarAndErrors) {
  EXPECT_EQ(parse_two_tree_seq("5;0-1;0-1"), theta_seq(5));
  EXPECT_EQ(parse_two_tree_seq(" 5; 1-0 ; 3-0 ").attachments, (std::vector<Edge>{{0, 1}, {0, 3}}));
  EXPECT_EQ(parse_two_tree_seq("3"), (TwoTreeSeq{3, {}}));
  EXPECT_EQ(format_two_tree_seq(parse_two_tree_seq("6;0-1;0-3;3-4")), "6;0-1;0-3;3-4");
  EXPECT_THROW(parse_two_tree_seq(""), std::invalid_argument);
  EXPECT_THROW(parse_two_tree_seq("x;0-1"), std::invalid_argument);
  EXPECT_THROW(parse_two_tree_seq("4;01"), std::invalid_argument);
  EXPECT_THROW(parse_two_tree_seq("4;0-9"), std::invalid_argument);
  EXPECT_THROW(parse_two_tree_seq("5;0-1"), std::invalid_argument);
}

TEST(IsIsomorphic, Examples) {
  EXPECT_TRUE(is_isomorphic(build_theta(3), build_fan(3)));
  EXPECT_FALSE(is_isomorphic(build_theta(5), build_fan(5)));
  EXPECT_FALSE(is_isomorphic(build_theta(5), build_theta(6)));
  EXPECT_THROW(is_isomorphic(build_fan(11), build_fan(11)), std::out_of_range);
}

TEST(IsIsomorphic, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const auto g = build_two_tree(random_seq(n, rng));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(is_isomorphic(g, relabel(g, perm)));
  }
}

TEST(EnumerateTwoTrees, ClassCounts) {
  // 2-trees up to isomorphism: 1, 1, 2, 5, 12, 39 for n = 3..8
  const std::vector<std::size_t> expected{1, 1, 2, 5, 12, 39};
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(enumerate_two_trees(n).size(), expected[n - 3]) << n;
  EXPECT_THROW(enumerate_two_trees(9), std::out_of_range);
  EXPECT_THROW(enumerate_two_trees(2), std::out_of_range);
}

TEST(EnumerateTwoTrees, PairwiseDistinctAndClosed) {
  std::mt19937 rng(3);
  for (int n = 3; n <= 7; ++n) {
    const auto reps = enumerate_two_trees(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(is_isomorphic(reps[i], reps[j]));
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = build_two_tree(random_seq(n, rng));
      EXPECT_TRUE(std::any_of(reps.begin(), reps.end(), [&](const auto& r) { return is_isomorphic(r, g); }));
    }
  }
}

TEST(EnumerateTwoTrees, ContainsCounterexampleShapes) {
  auto reps = enumerate_two_trees(6);
  auto has = [&](std::vector<int> d) {
    return std::any_of(reps.begin(), reps.end(), [&](const auto& g) { return degree_sequence(g) == d; });
  };
  EXPECT_TRUE(has({5, 3, 3, 3, 2, 2}));
  EXPECT_TRUE(has({4, 4, 3, 3, 2, 2}));
}

}  // namespace
}  // namespace bichrom
