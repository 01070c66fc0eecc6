#include "bcp/coloring.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "bcp/generators.hpp"
#include "test_graphs.hpp"

namespace bcp {
namespace {

using testing::hypercube3;

FaceColoring color_of(const Graph& g) {
  const auto emb = planar_embedding(g);
  EXPECT_TRUE(emb.has_value());
  return three_face_coloring(*emb);
}

// Every color class of a proper 3-edge-coloring of a cubic graph is a
// perfect matching.
void expect_perfect_matching_classes(const Graph& g, const EdgeColoring& ec) {
  for (int c = 0; c < 3; ++c) {
    std::vector<int> covered(g.order(), 0);
    int count = 0;
    for (int e = 0; e < g.size(); ++e) {
      if (static_cast<int>(ec.color[e]) != c) continue;
      ++count;
      ++covered[g.edge(e).u];
      ++covered[g.edge(e).v];
    }
    EXPECT_EQ(count, g.order() / 2);
    EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](int x) { return x == 1; }));
  }
}

TEST(ColoringTest, CubeOppositeFacesShareColor) {
  const Graph q3 = hypercube3();
  const FaceColoring fc = color_of(q3);
  ASSERT_EQ(fc.faces.size(), 6u);
  EXPECT_TRUE(is_proper_face_coloring(q3, fc));
  // Opposite faces are exactly the vertex-disjoint pairs.
  for (std::size_t a = 0; a < fc.faces.size(); ++a) {
    for (std::size_t b = a + 1; b < fc.faces.size(); ++b) {
      bool disjoint = true;
      for (const auto& da : fc.faces[a].boundary) {
        for (const auto& db : fc.faces[b].boundary) {
          if (da.from == db.from) disjoint = false;
        }
      }
      if (disjoint) {
        EXPECT_EQ(fc.color[a], fc.color[b]);
      }
    }
  }
}

TEST(ColoringTest, GaugeIsDeterministic) {
  const auto emb = planar_embedding(gen_prism(6));
  ASSERT_TRUE(emb.has_value());
  const auto fc = three_face_coloring(*emb);
  // The two hexagons have the highest degree; the first of them gets E1.
  int first = -1;
  for (const auto& f : fc.faces) {
    if (f.length() == 6) {
      first = f.id;
      break;
    }
  }
  ASSERT_GE(first, 0);
  EXPECT_EQ(fc.color[first], FaceColor::E1);
  EXPECT_EQ(three_face_coloring(*emb).color, fc.color);
}

TEST(ColoringTest, HexagonalPrism) {
  const Graph g = gen_prism(6);
  const FaceColoring fc = color_of(g);
  EXPECT_EQ(fc.faces.size(), 8u);
  EXPECT_TRUE(is_proper_face_coloring(g, fc));
}

TEST(ColoringTest, K4NeedsFourColors) {
  const auto emb = planar_embedding(testing::complete_graph(4));
  ASSERT_TRUE(emb.has_value());
  EXPECT_THROW((void)three_face_coloring(*emb), InvalidInput);
}

TEST(ColoringTest, InducedLabelIsThePairOfFaceColors) {
  EXPECT_EQ(combine(FaceColor::E1, FaceColor::E2), EdgeColor::E1E2);
  EXPECT_EQ(combine(FaceColor::E3, FaceColor::E1), EdgeColor::E1E3);
  EXPECT_EQ(combine(FaceColor::E2, FaceColor::E3), EdgeColor::E2E3);
  EXPECT_EQ(to_string(EdgeColor::E1E2), "E1+E2");
}

TEST(ColoringTest, CubeInducedEdgeColoringIsProper) {
  const Graph q3 = hypercube3();
  const auto emb = planar_embedding(q3);
  const auto fc = three_face_coloring(*emb);
  const auto ec = induced_edge_coloring(*emb, fc);
  EXPECT_TRUE(verify_edge_coloring(q3, ec));
  for (Vertex v = 0; v < 8; ++v) {
    std::array<int, 3> seen{};
    for (Vertex w : q3.neighbors(v)) ++seen[static_cast<int>(ec.color[q3.edge_index(v, w)])];
    EXPECT_EQ(seen, (std::array<int, 3>{1, 1, 1}));
  }
}

TEST(ColoringTest, PrismClassesArePerfectMatchings) {
  const Graph g = gen_prism(6);
  const auto emb = planar_embedding(g);
  const auto ec = induced_edge_coloring(*emb, three_face_coloring(*emb));
  expect_perfect_matching_classes(g, ec);
}

TEST(ColoringTest, InducedColoringRejectsImproperFaceColoring) {
  const auto emb = planar_embedding(hypercube3());
  auto fc = three_face_coloring(*emb);
  std::fill(fc.color.begin(), fc.color.end(), FaceColor::E1);
  EXPECT_THROW((void)induced_edge_coloring(*emb, fc), InternalError);
}

TEST(ColoringTest, VerifyEdgeColoring) {
  const Graph c4 = gen_cycle(4);
  EdgeColoring bad{{EdgeColor::E1E2, EdgeColor::E1E2, EdgeColor::E1E3, EdgeColor::E1E3}};
  // edges sorted: (0,1) (0,3) (1,2) (2,3); (0,1),(0,3) share vertex 0
  EXPECT_FALSE(verify_edge_coloring(c4, bad));
  EdgeColoring good{{EdgeColor::E1E2, EdgeColor::E1E3, EdgeColor::E1E3, EdgeColor::E1E2}};
  EXPECT_TRUE(verify_edge_coloring(c4, good));
  EXPECT_TRUE(verify_edge_coloring(Graph{}, EdgeColoring{}));
}

// Permuting the face labels permutes the edge labels through the induced map.
TEST(ColoringTest, RecoloringStability) {
  const Graph g = gen_prism_join(6, 8, 1, 3);
  const auto emb = planar_embedding(g);
  const auto fc = three_face_coloring(*emb);
  const auto ec = induced_edge_coloring(*emb, fc);
  std::array<FaceColor, 3> perm{FaceColor::E1, FaceColor::E2, FaceColor::E3};
  int checked = 0;
  do {
    FaceColoring permuted = fc;
    for (auto& c : permuted.color) c = perm[static_cast<int>(c)];
    const auto pec = induced_edge_coloring(*emb, permuted);
    const auto map = induced_label_map(perm);
    for (int e = 0; e < g.size(); ++e) EXPECT_EQ(pec.color[e], map[static_cast<int>(ec.color[e])]);
    ++checked;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(checked, 6);
}

TEST(ColoringTest, CorpusColoringSuite) {
  for (const auto& entry : standard_corpus()) {
    SCOPED_TRACE(entry.name);
    const auto emb = planar_embedding(entry.graph);
    ASSERT_TRUE(emb.has_value());
    const auto fc = three_face_coloring(*emb);
    EXPECT_TRUE(is_proper_face_coloring(entry.graph, fc));
    const auto ec = induced_edge_coloring(*emb, fc);
    EXPECT_TRUE(verify_edge_coloring(entry.graph, ec));
    expect_perfect_matching_classes(entry.graph, ec);
  }
}

}  // namespace
}  // namespace bcp
