#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcp/errors.hpp"

namespace bcp {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;

  [[nodiscard]] bool touches(Vertex w) const { return u == w || v == w; }
  [[nodiscard]] Vertex other(Vertex w) const { return w == u ? v : u; }
};

[[nodiscard]] inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// "u-v" key used by the JSON formats.
[[nodiscard]] inline std::string edge_key(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Simple undirected graph on the dense vertex set 0..n-1. Immutable once
/// built; edges are kept sorted so edge indices are canonical.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates the pair list. Throws InvalidInput on a loop or an endpoint
  /// outside 0..n-1.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 0) throw InvalidInput("vertex count must be non-negative");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") has an endpoint outside 0.." + std::to_string(n - 1));
      }
      if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
      edges.push_back(make_edge(a, b));
    }
    return Graph(n, std::move(edges));
  }

  static Graph from_edges(int n, std::vector<Edge> edges) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edge_list(n, pairs);
  }

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(int index) const { return edges_[index]; }

  /// Neighbors in increasing order.
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Index into edges(), or -1.
  [[nodiscard]] int edge_index(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return -1;
    const Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return (it != edges_.end() && *it == key) ? static_cast<int>(it - edges_.begin()) : -1;
  }
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

  [[nodiscard]] int max_degree() const {
    int best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
    return best;
  }
  [[nodiscard]] int min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (const auto& adj : adjacency_) best = std::min(best, static_cast<int>(adj.size()));
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// ---------------------------------------------------------------------------
// Structural predicates

[[nodiscard]] inline bool is_cubic(const Graph& g) {
  if (g.order() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

namespace detail {

/// Component label per vertex (-1 for removed vertices), ignoring masked edges.
inline int label_components(const Graph& g, std::span<const char> removed_edge,
                            std::span<const char> removed_vertex, std::vector<int>& label) {
  const int n = g.order();
  label.assign(n, -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1 || (!removed_vertex.empty() && removed_vertex[s])) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[y] != -1) continue;
        if (!removed_vertex.empty() && removed_vertex[y]) continue;
        if (!removed_edge.empty() && removed_edge[g.edge_index(x, y)]) continue;
        label[y] = count;
        stack.push_back(y);
      }
    }
    ++count;
  }
  return count;
}

/// Calls visit(subset) for every size-k subset of 0..n-1 in lexicographic
/// order; stops early when visit returns true. Returns whether it stopped.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  if (k > n || k < 0) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(std::span<const int>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

[[nodiscard]] inline int count_components(const Graph& g) {
  std::vector<int> label;
  return detail::label_components(g, {}, {}, label);
}

[[nodiscard]] inline bool is_connected(const Graph& g) { return count_components(g) <= 1; }

enum class Side : std::uint8_t { A, B };

struct Bipartition {
  std::vector<Side> side;

  [[nodiscard]] int count(Side s) const {
    return static_cast<int>(std::count(side.begin(), side.end(), s));
  }
};

/// 2-coloring by BFS; vertex 0 of every component lands on side A.
/// Empty optional when the graph has an odd cycle.
[[nodiscard]] inline std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g.neighbors(x)) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  result.side.reserve(n);
  for (int c : color) result.side.push_back(c == 0 ? Side::A : Side::B);
  return result;
}

[[nodiscard]] inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// ---------------------------------------------------------------------------
// Connectivity by exhaustive cut search. Both values are bounded by the
// minimum degree, so only candidate cuts smaller than it are enumerated; for
// cubic graphs that means single elements and pairs.

/// Edge connectivity of a connected graph. Throws InvalidInput if disconnected.
[[nodiscard]] inline int edge_connectivity(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("edge_connectivity: graph is disconnected");
  const int delta = g.min_degree();
  std::vector<char> removed(g.size(), 0);
  std::vector<int> label;
  for (int k = 1; k < delta; ++k) {
    const bool found = detail::for_each_subset(g.size(), k, [&](std::span<const int> subset) {
      for (int e : subset) removed[e] = 1;
      const bool cut = detail::label_components(g, removed, {}, label) > 1;
      for (int e : subset) removed[e] = 0;
      return cut;
    });
    if (found) return k;
  }
  return delta;
}

/// Vertex connectivity of a connected graph (n-1 for complete graphs).
[[nodiscard]] inline int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("vertex_connectivity: graph is disconnected");
  const int n = g.order();
  if (n <= 1) return 0;
  const bool complete = g.size() == n * (n - 1) / 2;
  const int bound = complete ? n - 1 : g.min_degree();
  std::vector<char> removed(n, 0);
  std::vector<int> label;
  for (int k = 1; k < bound; ++k) {
    const bool found = detail::for_each_subset(n, k, [&](std::span<const int> subset) {
      for (int v : subset) removed[v] = 1;
      const bool cut = detail::label_components(g, {}, removed, label) > 1;
      for (int v : subset) removed[v] = 0;
      return cut;
    });
    if (found) return k;
  }
  return bound;
}

// ---------------------------------------------------------------------------
// Construction helpers

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
/// `to_parent[i]` is the original id of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

[[nodiscard]] inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) local[vertices[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) pairs.emplace_back(local[e.u], local[e.v]);
  }
  return {Graph::from_edge_list(static_cast<int>(vertices.size()), pairs),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

[[nodiscard]] inline Graph with_edge(const Graph& g, Vertex a, Vertex b) {
  auto edges = g.edges();
  edges.push_back(make_edge(a, b));
  return Graph::from_edges(g.order(), std::move(edges));
}

[[nodiscard]] inline Graph without_edge(const Graph& g, Vertex a, Vertex b) {
  auto edges = g.edges();
  std::erase(edges, make_edge(a, b));
  return Graph::from_edges(g.order(), std::move(edges));
}

/// Relabels vertex v to perm[v].
[[nodiscard]] inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.size());
  for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edge_list(g.order(), pairs);
}

}  // namespace bcp
