#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "bcp/errors.hpp"
#include "bcp/graph.hpp"
#include "bcp/planar.hpp"

namespace bcp {

/// Order thresholds of the two-case construction: graphs up to
/// `small_order_limit` vertices are laid out directly, 2-connected graphs from
/// `large_order_threshold` vertices on are split at a 2-edge-cut.
struct DecompositionConfig {
  int small_order_limit = 24;
  int large_order_threshold = 26;
};

/// T_k: rails x[0..k-1] and y[0..k-1], rungs x[i]-y[i].
struct Ladder {
  std::vector<Vertex> x;
  std::vector<Vertex> y;

  [[nodiscard]] int k() const { return static_cast<int>(x.size()); }

  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < k(); ++i) {
      out.push_back(make_edge(x[i], y[i]));
      if (i > 0) {
        out.push_back(make_edge(x[i - 1], x[i]));
        out.push_back(make_edge(y[i - 1], y[i]));
      }
    }
    return out;
  }
};

/// G = M(G_L, T_k, G_R) joined at u, v (left) and m, n (right).
struct JoinRecord {
  Vertex u = -1, v = -1, m = -1, n = -1;
  Ladder ladder;

  [[nodiscard]] int k() const { return ladder.k(); }

  /// (u,x1), (v,y1), (m,xk), (n,yk), or (u,m), (v,n) when k = 0.
  [[nodiscard]] std::vector<Edge> connectors() const {
    if (k() == 0) return {make_edge(u, m), make_edge(v, n)};
    return {make_edge(u, ladder.x.front()), make_edge(v, ladder.y.front()), make_edge(m, ladder.x.back()),
            make_edge(n, ladder.y.back())};
  }

  /// The two connectors on the left boundary, which form a 2-edge-cut.
  [[nodiscard]] std::pair<Edge, Edge> left_cut() const {
    const auto c = connectors();
    return {c[0], c[1]};
  }
};

/// A 2-edge-cut {(left_end[i], right_end[i])}, plus the left component.
struct TwoEdgeCut {
  std::array<Vertex, 2> left_end{};
  std::array<Vertex, 2> right_end{};
  std::vector<char> in_left;
  int larger_side = 0;
};

/// Thrown when an augmented side fails the 2-connected BCP check; the
/// decomposer reacts by trying the next cut.
class InvalidDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_bridgeless_cubic(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("graph is disconnected");
  if (!is_cubic(g)) throw InvalidInput("graph is not cubic");
  if (edge_connectivity(g) == 1) throw InvalidInput("graph has a bridge, so it is not a BCP graph");
}

}  // namespace detail

/// Every 2-edge-cut, most balanced first (smallest larger side), ties broken
/// by the lexicographically smallest edge pair. The left side is the
/// component of the smaller endpoint of the first edge.
[[nodiscard]] inline std::vector<TwoEdgeCut> two_edge_cuts(const Graph& g) {
  detail::require_bridgeless_cubic(g);
  std::vector<std::tuple<int, int, int, TwoEdgeCut>> found;
  std::vector<char> removed(g.size(), 0);
  std::vector<int> label;
  for (int e = 0; e < g.size(); ++e) {
    removed[e] = 1;
    for (int f = e + 1; f < g.size(); ++f) {
      removed[f] = 1;
      if (detail::label_components(g, removed, {}, label) > 1) {
        const Edge& a = g.edge(e);
        const Edge& b = g.edge(f);
        TwoEdgeCut cut;
        const int left_label = label[a.u];
        cut.in_left.resize(g.order());
        int left_size = 0;
        for (Vertex x = 0; x < g.order(); ++x) {
          cut.in_left[x] = label[x] == left_label;
          left_size += cut.in_left[x];
        }
        cut.left_end = {a.u, cut.in_left[b.u] ? b.u : b.v};
        cut.right_end = {a.v, b.other(cut.left_end[1])};
        cut.larger_side = std::max(left_size, g.order() - left_size);
        found.emplace_back(cut.larger_side, e, f, std::move(cut));
      }
      removed[f] = 0;
    }
    removed[e] = 0;
  }
  std::sort(found.begin(), found.end(),
            [](const auto& p, const auto& q) { return std::tie(std::get<0>(p), std::get<1>(p), std::get<2>(p)) <
                                                      std::tie(std::get<0>(q), std::get<1>(q), std::get<2>(q)); });
  std::vector<TwoEdgeCut> out;
  out.reserve(found.size());
  for (auto& t : found) out.push_back(std::move(std::get<3>(t)));
  return out;
}

/// Preferred 2-edge-cut of a bridgeless connected cubic graph, or nullopt if
/// it is 3-edge-connected. Throws InvalidInput on a bridge.
[[nodiscard]] inline std::optional<TwoEdgeCut> find_two_edge_cut(const Graph& g) {
  auto cuts = two_edge_cuts(g);
  if (cuts.empty()) return std::nullopt;
  return std::move(cuts.front());
}

/// Result of peeling the maximal ladder off a 2-edge-cut. Sides are relabeled
/// 0..k-1; `*_to_parent` maps back to the ids of the input graph.
struct LadderExtraction {
  Graph left;
  std::vector<Vertex> left_to_parent;
  Graph right;
  std::vector<Vertex> right_to_parent;
  JoinRecord record;  // in the input graph's ids
};

/// Extends the cut into the maximal ladder around it: while the two cut
/// endpoints on one side are adjacent they form a rung and the cut moves one
/// step further into that side. Stops with non-adjacent attach pairs.
[[nodiscard]] inline LadderExtraction extract_ladder(const Graph& g, const TwoEdgeCut& cut) {
  using detail::ensure;
  const std::vector<char>& in_left = cut.in_left;
  std::vector<char> in_ladder(g.order(), 0);

  // Peels rungs off one side. ends[i] is the side's endpoint of cut edge i,
  // across[i] the vertex on the other end of that edge.
  auto peel = [&](std::array<Vertex, 2> ends, std::array<Vertex, 2> across, std::vector<std::pair<Vertex, Vertex>>& rungs) {
    while (g.has_edge(ends[0], ends[1])) {
      rungs.emplace_back(ends[0], ends[1]);
      std::array<Vertex, 2> next{-1, -1};
      for (int i = 0; i < 2; ++i) {
        for (Vertex w : g.neighbors(ends[i])) {
          if (w != across[i] && w != ends[1 - i]) next[i] = w;
        }
      }
      ensure(next[0] >= 0 && next[1] >= 0 && next[0] != next[1], "extract_ladder: graph has a bridge");
      in_ladder[ends[0]] = in_ladder[ends[1]] = 1;
      across = ends;
      ends = next;
    }
    return ends;
  };

  std::vector<std::pair<Vertex, Vertex>> left_rungs;
  std::vector<std::pair<Vertex, Vertex>> right_rungs;
  const auto left_attach = peel(cut.left_end, cut.right_end, left_rungs);
  const auto right_attach = peel(cut.right_end, cut.left_end, right_rungs);

  LadderExtraction out;
  JoinRecord& rec = out.record;
  for (auto it = left_rungs.rbegin(); it != left_rungs.rend(); ++it) {
    rec.ladder.x.push_back(it->first);
    rec.ladder.y.push_back(it->second);
  }
  for (const auto& [a, b] : right_rungs) {
    rec.ladder.x.push_back(a);
    rec.ladder.y.push_back(b);
  }
  rec.u = left_attach[0];
  rec.v = left_attach[1];
  rec.m = right_attach[0];
  rec.n = right_attach[1];

  std::vector<Vertex> left_vertices;
  std::vector<Vertex> right_vertices;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (in_ladder[x]) continue;
    (in_left[x] ? left_vertices : right_vertices).push_back(x);
  }
  ensure(!left_vertices.empty() && !right_vertices.empty(), "extract_ladder: ladder consumed a whole side");
  auto left = induced_subgraph(g, left_vertices);
  auto right = induced_subgraph(g, right_vertices);
  out.left = std::move(left.graph);
  out.left_to_parent = std::move(left.to_parent);
  out.right = std::move(right.graph);
  out.right_to_parent = std::move(right.to_parent);
  return out;
}

/// True iff g is a 2-connected bipartite cubic planar graph.
[[nodiscard]] inline bool is_two_connected_bcp(const Graph& g) {
  return is_connected(g) && is_cubic(g) && is_bipartite(g) && vertex_connectivity(g) >= 2 && is_planar(g);
}

/// side + (a, b). Throws InvalidInput if a and b are already adjacent and
/// InvalidDecomposition if the result is not a 2-connected BCP graph.
[[nodiscard]] inline Graph augment(const Graph& side, Vertex a, Vertex b) {
  if (side.has_edge(a, b)) {
    throw InvalidInput("augment: attach vertices " + std::to_string(a) + " and " + std::to_string(b) +
                       " are adjacent; extend the ladder first");
  }
  Graph out = with_edge(side, a, b);
  if (!is_two_connected_bcp(out)) {
    throw InvalidDecomposition("augmented side is not a 2-connected BCP graph");
  }
  return out;
}

enum class LeafKind { SmallBcp, ThreeConnectedBcp };

[[nodiscard]] constexpr std::string_view to_string(LeafKind k) {
  return k == LeafKind::SmallBcp ? "small-bcp" : "three-connected-bcp";
}

/// One node of the ternary decomposition. Join nodes own a record in their
/// own vertex ids and point at two children whose ids map back through
/// left_to_parent / right_to_parent.
struct DecompositionNode {
  Graph graph;
  int depth = 0;
  std::optional<LeafKind> leaf_kind;
  std::optional<JoinRecord> join;
  int left = -1;
  int right = -1;
  std::vector<Vertex> left_to_parent;
  std::vector<Vertex> right_to_parent;

  [[nodiscard]] bool is_leaf() const { return leaf_kind.has_value(); }
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;  // nodes[0] is the root

  [[nodiscard]] const DecompositionNode& root() const { return nodes.front(); }

  [[nodiscard]] int leaf_count() const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const auto& x) { return x.is_leaf(); }));
  }
  [[nodiscard]] int join_count() const { return static_cast<int>(nodes.size()) - leaf_count(); }
  [[nodiscard]] int height() const {
    int h = 0;
    for (const auto& x : nodes) h = std::max(h, x.depth);
    return h;
  }
};

namespace detail {

inline void require_bcp(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("graph is empty");
  if (!is_connected(g)) throw InvalidInput("graph is disconnected");
  if (!is_cubic(g)) throw InvalidInput("graph is not cubic");
  if (!is_bipartite(g)) throw InvalidInput("graph is not bipartite");
  if (!is_planar(g)) throw InvalidInput("graph is not planar");
}

inline int decompose_into(DecompositionTree& tree, Graph g, int depth, const DecompositionConfig& config) {
  const int index = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  tree.nodes[index].depth = depth;
  const int kappa = edge_connectivity(g);
  ensure(kappa >= 2, "ternary_decompose: BCP graph with a bridge");
  const bool small = g.order() <= config.small_order_limit;
  if (small || kappa != 2) {
    tree.nodes[index].leaf_kind = small ? LeafKind::SmallBcp : LeafKind::ThreeConnectedBcp;
    tree.nodes[index].graph = std::move(g);
    return index;
  }
  if (g.order() < config.large_order_threshold) {
    throw InvalidInput("ternary_decompose: order " + std::to_string(g.order()) + " lies between the configured thresholds");
  }
  for (const auto& cut : two_edge_cuts(g)) {
    auto ex = extract_ladder(g, cut);
    const auto local = [](const std::vector<Vertex>& to_parent, Vertex x) {
      return static_cast<Vertex>(std::find(to_parent.begin(), to_parent.end(), x) - to_parent.begin());
    };
    Graph left_aug;
    Graph right_aug;
    try {
      left_aug = augment(ex.left, local(ex.left_to_parent, ex.record.u), local(ex.left_to_parent, ex.record.v));
      right_aug = augment(ex.right, local(ex.right_to_parent, ex.record.m), local(ex.right_to_parent, ex.record.n));
    } catch (const InvalidDecomposition&) {
      continue;
    }
    tree.nodes[index].join = ex.record;
    tree.nodes[index].left_to_parent = std::move(ex.left_to_parent);
    tree.nodes[index].right_to_parent = std::move(ex.right_to_parent);
    tree.nodes[index].graph = std::move(g);
    const int l = decompose_into(tree, std::move(left_aug), depth + 1, config);
    const int r = decompose_into(tree, std::move(right_aug), depth + 1, config);
    tree.nodes[index].left = l;
    tree.nodes[index].right = r;
    return index;
  }
  throw InternalError("ternary_decompose: no 2-edge-cut yields valid augmented sides");
}

}  // namespace detail

/// Splits a connected BCP graph at 2-edge-cuts until every leaf has at most
/// `small_order_limit` vertices or is 3-connected. Throws InvalidInput naming
/// the failed predicate when g is not a connected BCP graph.
[[nodiscard]] inline DecompositionTree ternary_decompose(const Graph& g, const DecompositionConfig& config = {}) {
  detail::require_bcp(g);
  DecompositionTree tree;
  detail::decompose_into(tree, g, 0, config);
  return tree;
}

namespace detail {

inline Graph reassemble_node(const DecompositionTree& tree, int index) {
  const auto& node = tree.nodes[index];
  if (node.is_leaf()) return node.graph;
  const JoinRecord& rec = *node.join;
  const int order = static_cast<int>(node.left_to_parent.size() + node.right_to_parent.size()) + 2 * rec.k();
  std::vector<Edge> edges;
  auto lift = [&](int child, const std::vector<Vertex>& to_parent, Vertex a, Vertex b) {
    const Edge added = make_edge(a, b);
    const Graph sub = reassemble_node(tree, child);
    for (const auto& e : sub.edges()) {
      const Edge mapped = make_edge(to_parent[e.u], to_parent[e.v]);
      if (mapped != added) edges.push_back(mapped);
    }
  };
  lift(node.left, node.left_to_parent, rec.u, rec.v);
  lift(node.right, node.right_to_parent, rec.m, rec.n);
  for (const auto& e : rec.ladder.edges()) edges.push_back(e);
  for (const auto& e : rec.connectors()) edges.push_back(e);
  return Graph::from_edges(order, std::move(edges));
}

}  // namespace detail

/// Rebuilds the root graph from the leaves and join records alone.
[[nodiscard]] inline Graph reassemble(const DecompositionTree& tree) { return detail::reassemble_node(tree, 0); }

}  // namespace bcp
