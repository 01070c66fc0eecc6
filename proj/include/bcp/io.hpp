#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bcp/book.hpp"
#include "bcp/coloring.hpp"
#include "bcp/decomposition.hpp"
#include "bcp/errors.hpp"
#include "bcp/graph.hpp"
#include "bcp/verify.hpp"

namespace bcp {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// graph6

/// Raised for malformed graph6 text; `offset` is the byte where decoding failed.
class Graph6Error : public InvalidInput {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : InvalidInput("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}

  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

constexpr std::string_view kGraph6Header = ">>graph6<<";

inline int graph6_chunk(std::string_view s, std::size_t at) {
  if (at >= s.size()) throw Graph6Error("unexpected end of input", at);
  const int c = static_cast<unsigned char>(s[at]);
  if (c < 63 || c > 126) throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", at);
  return c - 63;
}

}  // namespace detail

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
[[nodiscard]] inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(detail::kGraph6Header)) pos = detail::kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (pos >= text.size()) throw Graph6Error("empty input", pos);

  std::int64_t n = 0;
  const int first = detail::graph6_chunk(text, pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else {
    const bool wide = pos + 1 < text.size() && text[pos + 1] == '~';
    const int digits = wide ? 6 : 3;
    const std::size_t start = pos + (wide ? 2 : 1);
    for (int i = 0; i < digits; ++i) n = (n << 6) | detail::graph6_chunk(text, start + i);
    pos = start + digits;
  }
  if (n > (1 << 20)) throw Graph6Error("vertex count " + std::to_string(n) + " too large", 0);

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes) {
    throw Graph6Error("expected " + std::to_string(bytes) + " adjacency bytes, found " +
                          std::to_string(text.size() - pos),
                      text.size() < pos + bytes ? text.size() : pos + bytes);
  }
  std::vector<std::pair<int, int>> pairs;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = detail::graph6_chunk(text, pos + static_cast<std::size_t>(k / 6));
      if (chunk & (1 << (5 - k % 6))) pairs.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  if (k % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    if (detail::graph6_chunk(text, last) & ((1 << (6 - k % 6)) - 1)) throw Graph6Error("nonzero padding bits", last);
  }
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

[[nodiscard]] inline std::string emit_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int chunk = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((chunk << (6 - used)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

[[nodiscard]] inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

[[nodiscard]] inline Graph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw InvalidInput("graph JSON needs the keys \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) throw InvalidInput("graph JSON: \"n\" must be an integer");
  if (!doc["edges"].is_array()) throw InvalidInput("graph JSON: \"edges\" must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InvalidInput("graph JSON: every edge must be a pair of integers, got " + e.dump());
    }
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const Graph g = Graph::from_edge_list(doc["n"].get<int>(), pairs);
  if (g.size() != static_cast<int>(pairs.size())) throw InvalidInput("graph JSON: duplicate edge");
  return g;
}

/// Graph from either format: JSON if the text starts with '{', graph6 otherwise.
[[nodiscard]] inline Graph parse_graph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw InvalidInput("empty graph input");
  text.remove_prefix(start);
  if (text.front() != '{') return parse_graph6(text);
  try {
    return graph_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
}

[[nodiscard]] inline json embedding_to_json(const Graph& g, const BookEmbedding& be) {
  json pages = json::object();
  for (int e = 0; e < g.size(); ++e) pages[edge_key(g.edge(e))] = be.page[e];
  return {{"spine", be.spine.order()}, {"pages", std::move(pages)}};
}

namespace detail {

inline Edge parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  try {
    if (dash == std::string::npos) throw std::invalid_argument(key);
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(key.substr(0, dash), &used_a);
    const int b = std::stoi(key.substr(dash + 1), &used_b);
    if (used_a != dash || used_b != key.size() - dash - 1) throw std::invalid_argument(key);
    return make_edge(a, b);
  } catch (const std::logic_error&) {
    throw InvalidInput("embedding JSON: malformed edge key \"" + key + "\"");
  }
}

}  // namespace detail

/// Reads {"spine": [...], "pages": {"u-v": int}} against g. Keys may name the
/// endpoints in either order. Throws InvalidInput for a key that is not an edge
/// of g or an edge of g without a page.
[[nodiscard]] inline BookEmbedding embedding_from_json(const Graph& g, const json& doc) {
  if (!doc.is_object() || !doc.contains("spine") || !doc.contains("pages")) {
    throw InvalidInput("embedding JSON needs the keys \"spine\" and \"pages\"");
  }
  BookEmbedding be;
  try {
    be.spine = SpineOrder(doc["spine"].get<std::vector<Vertex>>());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("embedding JSON: spine must be a list of vertices: ") + e.what());
  }
  if (be.spine.size() != g.order()) throw InvalidInput("embedding JSON: spine does not cover every vertex");
  if (!doc["pages"].is_object()) throw InvalidInput("embedding JSON: \"pages\" must be an object");
  be.page.assign(g.size(), 0);
  std::vector<char> seen(g.size(), 0);
  for (const auto& [key, value] : doc["pages"].items()) {
    const Edge e = detail::parse_edge_key(key);
    const int index = (e.u >= 0 && e.v < g.order()) ? g.edge_index(e.u, e.v) : -1;
    if (index < 0) throw InvalidInput("embedding JSON: " + key + " is not an edge of the graph");
    if (!value.is_number_integer()) throw InvalidInput("embedding JSON: page of " + key + " must be an integer");
    be.page[index] = value.get<int>();
    seen[index] = 1;
  }
  for (int e = 0; e < g.size(); ++e) {
    if (!seen[e]) {
      throw InvalidInput("embedding JSON: edge " + edge_key(g.edge(e)) + " has no page");
    }
  }
  return be;
}

[[nodiscard]] inline json coloring_to_json(const Graph& g, const FaceColoring& fc, const EdgeColoring& ec) {
  json faces = json::object();
  for (std::size_t f = 0; f < fc.color.size(); ++f) faces[std::to_string(f)] = to_string(fc.color[f]);
  json edges = json::object();
  for (int e = 0; e < g.size(); ++e) edges[edge_key(g.edge(e))] = to_string(ec.color[e]);
  return {{"faces", std::move(faces)}, {"edges", std::move(edges)}};
}

[[nodiscard]] inline json violation_to_json(const Violation& v) {
  json out{{"kind", to_string(v.kind)}, {"page", v.page}};
  switch (v.kind) {
    case ViolationKind::Crossing:
      out["edges"] = {edge_key(v.first), edge_key(v.second)};
      break;
    case ViolationKind::MatchingDegree:
      out["vertex"] = v.vertex;
      break;
    case ViolationKind::PageOutOfRange:
      out["edge"] = edge_key(v.first);
      break;
  }
  return out;
}

[[nodiscard]] inline std::string describe(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::Crossing:
      return "edges " + edge_key(v.first) + " and " + edge_key(v.second) + " cross on page " + std::to_string(v.page);
    case ViolationKind::MatchingDegree:
      return "vertex " + std::to_string(v.vertex) + " has two edges on page " + std::to_string(v.page);
    case ViolationKind::PageOutOfRange:
      return "edge " + edge_key(v.first) + " is on page " + std::to_string(v.page) + ", outside the bound";
  }
  return "unknown violation";
}

namespace detail {

inline json node_to_json(const DecompositionTree& tree, int index) {
  const auto& node = tree.nodes[index];
  if (node.is_leaf()) {
    return {{"type", "leaf"},
            {"kind", to_string(*node.leaf_kind)},
            {"depth", node.depth},
            {"graph", graph_to_json(node.graph)}};
  }
  const JoinRecord& rec = *node.join;
  return {{"type", "join"},
          {"depth", node.depth},
          {"order", node.graph.order()},
          {"k", rec.k()},
          {"attach", {{"u", rec.u}, {"v", rec.v}, {"m", rec.m}, {"n", rec.n}}},
          {"ladder", {{"x", rec.ladder.x}, {"y", rec.ladder.y}}},
          {"left", {{"to_parent", node.left_to_parent}, {"node", node_to_json(tree, node.left)}}},
          {"right", {{"to_parent", node.right_to_parent}, {"node", node_to_json(tree, node.right)}}}};
}

}  // namespace detail

/// Nested tree: leaves carry their graph in edge-list form, joins carry the
/// attach vertices, the ladder rails and each child's vertex map.
[[nodiscard]] inline json decomposition_to_json(const DecompositionTree& tree) {
  return detail::node_to_json(tree, 0);
}

}  // namespace bcp
