#include "bcp/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bcp/generators.hpp"
#include "test_graphs.hpp"

namespace bcp {
namespace {

using testing::complete_bipartite;
using testing::hypercube3;
using testing::path_graph;
using testing::single_edge;
using testing::two_cubes_t0;

TEST(GraphTest, FromEdgeListSingleEdge) {
  const Graph g = single_edge();
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(GraphTest, FromEdgeListDeduplicatesAndNormalizes) {
  const std::vector<std::pair<int, int>> pairs{{1, 0}, {0, 1}, {2, 1}};
  const Graph g = Graph::from_edge_list(3, pairs);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(GraphTest, FromEdgeListCubeIsCubic) {
  const Graph q3 = hypercube3();
  EXPECT_EQ(q3.size(), 12);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(q3.degree(v), 3);
  EXPECT_EQ(q3.max_degree(), 3);
  EXPECT_EQ(q3.min_degree(), 3);
}

TEST(GraphTest, FromEdgeListRejectsLoopAndRange) {
  const std::vector<std::pair<int, int>> loop{{0, 0}};
  EXPECT_THROW((void)Graph::from_edge_list(3, loop), InvalidInput);
  const std::vector<std::pair<int, int>> out_of_range{{0, 3}};
  EXPECT_THROW((void)Graph::from_edge_list(3, out_of_range), InvalidInput);
}

TEST(GraphTest, IsCubic) {
  EXPECT_TRUE(is_cubic(hypercube3()));
  EXPECT_FALSE(is_cubic(gen_cycle(4)));
  EXPECT_FALSE(is_cubic(single_edge()));
}

TEST(GraphTest, BipartitionEvenCycleAlternates) {
  const auto parts = bipartition(gen_cycle(6));
  ASSERT_TRUE(parts.has_value());
  for (int i = 0; i < 6; ++i) EXPECT_NE(parts->side[i], parts->side[(i + 1) % 6]);
}

TEST(GraphTest, BipartitionOddCycleFails) { EXPECT_FALSE(bipartition(gen_cycle(5)).has_value()); }

TEST(GraphTest, BipartitionCubeMatchesCoordinateParity) {
  const auto parts = bipartition(hypercube3());
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->count(Side::A), 4);
  EXPECT_EQ(parts->count(Side::B), 4);
  for (Vertex v = 0; v < 8; ++v) {
    EXPECT_EQ(parts->side[v] == Side::A, std::popcount(static_cast<unsigned>(v)) % 2 == 0);
  }
}

TEST(GraphTest, EdgeConnectivity) {
  EXPECT_EQ(edge_connectivity(hypercube3()), 3);
  EXPECT_EQ(edge_connectivity(two_cubes_t0()), 2);
  EXPECT_EQ(edge_connectivity(path_graph(5)), 1);
}

TEST(GraphTest, VertexConnectivity) {
  EXPECT_EQ(vertex_connectivity(hypercube3()), 3);
  EXPECT_EQ(vertex_connectivity(two_cubes_t0()), 2);
  EXPECT_EQ(vertex_connectivity(complete_bipartite(3, 3)), 3);
  EXPECT_EQ(vertex_connectivity(testing::complete_graph(4)), 3);
}

TEST(GraphTest, ConnectivityRejectsDisconnected) {
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {2, 3}};
  const Graph g = Graph::from_edge_list(4, pairs);
  EXPECT_THROW((void)edge_connectivity(g), InvalidInput);
  EXPECT_THROW((void)vertex_connectivity(g), InvalidInput);
}

// kappa <= kappa' <= delta on random connected graphs.
TEST(GraphTest, WhitneyInequalityOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 6;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    std::bernoulli_distribution extra(0.35);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (extra(rng)) pairs.emplace_back(i, j);
    const Graph g = Graph::from_edge_list(n, pairs);
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    EXPECT_LE(kappa, lambda);
    EXPECT_LE(lambda, g.min_degree());
  }
}

// Connected bipartite cubic graphs: kappa = kappa' >= 2 and the order is even.
TEST(GraphTest, BipartiteCubicConnectivityProperties) {
  for (const auto& entry : standard_corpus()) {
    const Graph& g = entry.graph;
    SCOPED_TRACE(entry.name);
    const int kappa = vertex_connectivity(g);
    EXPECT_EQ(kappa, edge_connectivity(g));
    EXPECT_GE(kappa, 2);
    EXPECT_EQ(g.order() % 2, 0);
  }
}

TEST(GraphTest, InducedSubgraphAndRelabel) {
  const Graph q3 = hypercube3();
  const std::vector<Vertex> face{0, 1, 3, 2};
  const auto sub = induced_subgraph(q3, face);
  EXPECT_EQ(sub.graph.order(), 4);
  EXPECT_EQ(sub.graph.size(), 4);
  std::vector<Vertex> perm{7, 6, 5, 4, 3, 2, 1, 0};
  const Graph r = relabel(q3, perm);
  EXPECT_EQ(r, q3);  // complementing every bit is an automorphism
}

}  // namespace
}  // namespace bcp
