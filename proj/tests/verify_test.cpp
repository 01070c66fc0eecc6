#include "bcp/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include "bcp/dispersability.hpp"
#include "bcp/embedding.hpp"
#include "bcp/generators.hpp"
#include "test_graphs.hpp"

namespace bcp {
namespace {

using testing::hypercube3;

TEST(EdgesCrossTest, Basics) {
  const SpineOrder s(std::vector<Vertex>{0, 1, 2, 3});
  EXPECT_TRUE(edges_cross(s, make_edge(0, 2), make_edge(1, 3)));
  EXPECT_FALSE(edges_cross(s, make_edge(0, 3), make_edge(1, 2)));
  EXPECT_FALSE(edges_cross(s, make_edge(0, 1), make_edge(2, 3)));
  EXPECT_FALSE(edges_cross(s, make_edge(0, 2), make_edge(2, 3)));
}

TEST(EdgesCrossTest, UsesPositionsNotLabels) {
  const SpineOrder s(std::vector<Vertex>{3, 1, 0, 2});
  // positions: 3->0, 1->1, 0->2, 2->3
  EXPECT_TRUE(edges_cross(s, make_edge(3, 0), make_edge(1, 2)));
  EXPECT_FALSE(edges_cross(s, make_edge(3, 2), make_edge(1, 0)));
}

// Ladder T_4 with its hard-coded order and pages: rungs on 0, the rail pair
// between rungs 1-2 and 3-4 on 1, the middle rail pair on 2.
BookEmbedding ladder4_layout(const Graph& t4) {
  BookEmbedding be{ladder_order(4), std::vector<int>(t4.size(), -1)};
  for (int i = 0; i < 4; ++i) be.page[t4.edge_index(2 * i, 2 * i + 1)] = 0;
  for (int i = 0; i + 1 < 4; ++i) {
    const int p = i % 2 == 0 ? 1 : 2;
    be.page[t4.edge_index(2 * i, 2 * i + 2)] = p;
    be.page[t4.edge_index(2 * i + 1, 2 * i + 3)] = p;
  }
  return be;
}

TEST(VerifyTest, LadderLayoutIsValid) {
  const Graph t4 = gen_ladder(4);
  EXPECT_TRUE(verify_matching_book_embedding(t4, ladder4_layout(t4), 3).empty());
}

TEST(VerifyTest, SharedPageAtVertexIsMatchingDegree) {
  const Graph t4 = gen_ladder(4);
  auto be = ladder4_layout(t4);
  // rail x1-x2 onto the rung page, meeting rung x1-y1 at x1
  be.page[t4.edge_index(0, 2)] = 0;
  const auto v = verify_matching_book_embedding(t4, be, 3);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.kind == ViolationKind::MatchingDegree && (x.vertex == 0 || x.vertex == 2) && x.page == 0;
  }));
}

TEST(VerifyTest, CrossingIsReported) {
  const std::vector<std::pair<int, int>> pairs{{0, 2}, {1, 3}};
  const Graph g = Graph::from_edge_list(4, pairs);
  const auto v = verify_matching_book_embedding(g, {identity_order(4), {0, 0}}, 3);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::Crossing);
  EXPECT_TRUE(verify_matching_book_embedding(g, {identity_order(4), {0, 1}}, 3).empty());
}

TEST(VerifyTest, PageOutOfRange) {
  const Graph g = testing::single_edge();
  const auto v = verify_matching_book_embedding(g, {identity_order(2), {3}}, 3);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::PageOutOfRange);
}

TEST(VerifyTest, UncoveredEdgeIsContractViolation) {
  const Graph g = gen_cycle(4);
  EXPECT_THROW((void)verify_matching_book_embedding(g, {identity_order(4), {0, 1}}, 3), InvalidInput);
  EXPECT_THROW((void)verify_matching_book_embedding(g, {identity_order(3), {0, 1, 0, 1}}, 3), InvalidInput);
}

TEST(VerifyTest, RandomSharedEndpointMutationIsFlagged) {
  std::mt19937 rng(11);
  const Graph q3 = hypercube3();
  const auto base = embed(q3);
  for (int trial = 0; trial < 50; ++trial) {
    auto be = base;
    const int e = std::uniform_int_distribution<int>(0, q3.size() - 1)(rng);
    be.page[e] = (be.page[e] + 1 + trial % 2) % 3;
    const auto v = verify_matching_book_embedding(q3, be, 3);
    EXPECT_TRUE(std::any_of(v.begin(), v.end(),
                            [](const Violation& x) { return x.kind == ViolationKind::MatchingDegree; }));
  }
}

TEST(ColorGraphTest, ExactChromaticBounds) {
  const std::vector<std::vector<int>> triangle{{1, 2}, {0, 2}, {0, 1}};
  EXPECT_FALSE(color_graph(triangle, 2).colors.has_value());
  EXPECT_TRUE(color_graph(triangle, 3).colors.has_value());
  EXPECT_TRUE(color_graph({}, 0).colors.has_value());
}

TEST(OracleTest, SmallValues) {
  EXPECT_EQ(mbt_oracle(testing::single_edge(), 3), 1);
  EXPECT_EQ(mbt_oracle(gen_cycle(4), 3), 2);
  EXPECT_EQ(mbt_oracle(gen_cycle(6), 3), 2);
  EXPECT_EQ(mbt_oracle(testing::complete_bipartite(1, 3), 3), 3);
  EXPECT_EQ(mbt_oracle(hypercube3(), 3), 3);
}

TEST(OracleTest, ExceedsBound) {
  EXPECT_FALSE(mbt_oracle(hypercube3(), 2).has_value());
  // K5 needs more than its max degree on a matching book
  const auto k5 = mbt_oracle(testing::complete_graph(5), 6);
  ASSERT_TRUE(k5.has_value());
  EXPECT_GE(*k5, 4);
}

TEST(OracleTest, RefusesLargeInput) {
  EXPECT_THROW((void)mbt_oracle(gen_prism(6), 3), OracleRefused);
  EXPECT_NO_THROW((void)mbt_oracle(gen_ladder(5), 3, {.vertex_limit = 10}));
}

TEST(OracleTest, AtLeastMaxDegreeAndRelabelInvariant) {
  std::mt19937 rng(5);
  const std::vector<Graph> graphs{hypercube3(), gen_ladder(4), gen_cycle(8), testing::path_graph(6),
                                  testing::complete_bipartite(2, 3)};
  for (const auto& g : graphs) {
    const auto base = mbt_oracle(g, g.size());
    ASSERT_TRUE(base.has_value());
    EXPECT_GE(*base, g.max_degree());
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Vertex> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(mbt_oracle(relabel(g, perm), g.size()), base);
    }
  }
}

TEST(OracleTest, StandaloneLadderValues) {
  // Measured, not asserted as 3: a bare T_1 is one edge.
  const std::vector<int> expected{1, 2, 3, 3};
  for (int k = 1; k <= 4; ++k) {
    const auto value = mbt_oracle(gen_ladder(k), 3);
    ASSERT_TRUE(value.has_value());
    std::cout << "mbt(T_" << k << ") = " << *value << '\n';
    EXPECT_EQ(*value, expected[k - 1]) << k;
  }
}

TEST(DispersabilityTest, Examples) {
  const auto q3 = dispersability_check(hypercube3());
  EXPECT_TRUE(q3.dispersable());
  EXPECT_EQ(q3.pages, 3);
  EXPECT_TRUE(dispersability_check(gen_cycle(6)).dispersable());
  EXPECT_TRUE(dispersability_check(testing::complete_bipartite(1, 3)).dispersable());
  const auto big = dispersability_check(gen_prism(8));
  EXPECT_EQ(big.source, WitnessSource::Pipeline);
  EXPECT_TRUE(big.dispersable());
  EXPECT_FALSE(dispersability_check(testing::complete_graph(5)).dispersable());
}

}  // namespace
}  // namespace bcp
