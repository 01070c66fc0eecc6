#include "bcp/io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "bcp/embedding.hpp"
#include "bcp/generators.hpp"
#include "bcp/svg.hpp"
#include "test_graphs.hpp"

namespace bcp {
namespace {

TEST(Graph6Test, DecodesK4) {
  const Graph g = parse_graph6("C~");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(emit_graph6(testing::complete_graph(4)), "C~");
}

TEST(Graph6Test, KnownSmallEncodings) {
  EXPECT_EQ(emit_graph6(Graph::from_edge_list(0, {})), "?");
  EXPECT_EQ(emit_graph6(testing::single_edge()), "A_");
  EXPECT_EQ(emit_graph6(testing::path_graph(3)), "Bg");
  // same string as networkx.circular_ladder_graph(6)
  EXPECT_EQ(emit_graph6(gen_prism(6)), "KhEKAC`CGO_p");
  // header and trailing newline are accepted
  EXPECT_EQ(parse_graph6(">>graph6<<A_\n").size(), 1);
}

TEST(Graph6Test, LongFormVertexCount) {
  const Graph big = gen_cycle(70);
  const std::string s = emit_graph6(big);
  // 70 = 1 * 64 + 6 as three 6-bit digits
  EXPECT_EQ(s.substr(0, 6), "~?@EhC");
  EXPECT_EQ(parse_graph6(s).edges(), big.edges());
}

TEST(Graph6Test, RoundTripsCorpus) {
  for (const auto& entry : standard_corpus()) {
    EXPECT_EQ(parse_graph6(emit_graph6(entry.graph)).edges(), entry.graph.edges()) << entry.name;
  }
}

TEST(Graph6Test, MalformedInputReportsOffset) {
  try {
    (void)parse_graph6("C");
    FAIL() << "truncated input accepted";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW((void)parse_graph6("C~~"), Graph6Error);
  EXPECT_THROW((void)parse_graph6(""), Graph6Error);
  try {
    (void)parse_graph6("C\x20");
    FAIL() << "byte below 63 accepted";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  // "A`" sets a padding bit
  EXPECT_THROW((void)parse_graph6("A`"), Graph6Error);
}

TEST(GraphJsonTest, RoundTrip) {
  const Graph g = gen_prism(6);
  const json doc = graph_to_json(g);
  EXPECT_EQ(doc["n"], 12);
  EXPECT_EQ(doc["edges"].size(), 18u);
  EXPECT_EQ(graph_from_json(doc).edges(), g.edges());
  EXPECT_EQ(parse_graph(doc.dump()).edges(), g.edges());
  EXPECT_EQ(parse_graph("  " + emit_graph6(g) + "\n").edges(), g.edges());
}

TEST(GraphJsonTest, RejectsBadDocuments) {
  EXPECT_THROW((void)parse_graph("{\"n\": 3}"), InvalidInput);
  EXPECT_THROW((void)parse_graph("{\"n\": 3, \"edges\": [[0, 3]]}"), InvalidInput);
  EXPECT_THROW((void)parse_graph("{\"n\": 3, \"edges\": [[0, 1], [1, 0]]}"), InvalidInput);
  EXPECT_THROW((void)parse_graph("{\"n\": 3, \"edges\": [[0]]}"), InvalidInput);
  EXPECT_THROW((void)parse_graph("{not json"), InvalidInput);
  EXPECT_THROW((void)parse_graph("   "), InvalidInput);
}

TEST(EmbeddingJsonTest, RoundTrip) {
  const Graph g = testing::hypercube3();
  const BookEmbedding be = embed(g);
  const json doc = embedding_to_json(g, be);
  EXPECT_EQ(doc["pages"].size(), 12u);
  const BookEmbedding back = embedding_from_json(g, json::parse(doc.dump()));
  EXPECT_EQ(back.spine, be.spine);
  EXPECT_EQ(back.page, be.page);
}

TEST(EmbeddingJsonTest, KeysInEitherOrder) {
  const Graph g = testing::single_edge();
  const json doc{{"spine", {1, 0}}, {"pages", {{"1-0", 2}}}};
  EXPECT_EQ(embedding_from_json(g, doc).page, std::vector<int>{2});
}

TEST(EmbeddingJsonTest, RejectsIncompleteOrForeignEdges) {
  const Graph g = gen_cycle(4);
  const json missing{{"spine", {0, 1, 2, 3}}, {"pages", {{"0-1", 0}, {"1-2", 1}, {"2-3", 0}}}};
  EXPECT_THROW((void)embedding_from_json(g, missing), InvalidInput);
  const json foreign{{"spine", {0, 1, 2, 3}}, {"pages", {{"0-1", 0}, {"1-2", 1}, {"2-3", 0}, {"0-3", 1}, {"0-2", 1}}}};
  EXPECT_THROW((void)embedding_from_json(g, foreign), InvalidInput);
  const json bad_key{{"spine", {0, 1, 2, 3}}, {"pages", {{"0:1", 0}}}};
  EXPECT_THROW((void)embedding_from_json(g, bad_key), InvalidInput);
  const json bad_spine{{"spine", {0, 1, 1, 3}}, {"pages", json::object()}};
  EXPECT_THROW((void)embedding_from_json(g, bad_spine), InvalidInput);
}

TEST(ColoringJsonTest, LabelsEveryFaceAndEdge) {
  const Graph g = testing::hypercube3();
  const auto emb = planar_embedding(g);
  ASSERT_TRUE(emb.has_value());
  const auto fc = three_face_coloring(*emb);
  const json doc = coloring_to_json(g, fc, induced_edge_coloring(*emb, fc));
  EXPECT_EQ(doc["faces"].size(), 6u);
  EXPECT_EQ(doc["edges"].size(), 12u);
  EXPECT_EQ(doc["faces"]["0"], "E1");
}

TEST(DecompositionJsonTest, NestedJoin) {
  const std::array sizes{8, 8, 8};
  const std::array ladders{2, 1};
  const auto tree = ternary_decompose(gen_chain(sizes, ladders, 3));
  const json doc = decomposition_to_json(tree);
  EXPECT_EQ(doc["type"], "join");
  EXPECT_EQ(doc["order"], 54);
  int leaves = 0;
  auto walk = [&](auto& self, const json& node) -> void {
    if (node["type"] == "leaf") {
      ++leaves;
      EXPECT_TRUE(node["graph"].contains("edges"));
      return;
    }
    EXPECT_EQ(node["ladder"]["x"].size(), node["k"].get<std::size_t>());
    self(self, node["left"]["node"]);
    self(self, node["right"]["node"]);
  };
  walk(walk, doc);
  EXPECT_EQ(leaves, tree.leaf_count());
}

TEST(SvgTest, OneArcPerEdge) {
  const Graph g = gen_prism(6);
  const std::string svg = render_svg(g, embed(g));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  std::size_t arcs = 0;
  for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++arcs;
  EXPECT_EQ(arcs, 18u);
  EXPECT_NE(svg.find("data-page=\"2\""), std::string::npos);
  EXPECT_THROW((void)render_svg(g, {identity_order(3), {}}), InvalidInput);
}

}  // namespace
}  // namespace bcp
