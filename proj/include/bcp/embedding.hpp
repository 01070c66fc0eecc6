#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcp/book.hpp"
#include "bcp/coloring.hpp"
#include "bcp/decomposition.hpp"
#include "bcp/errors.hpp"
#include "bcp/graph.hpp"
#include "bcp/planar.hpp"
#include "bcp/verify.hpp"

namespace bcp {

struct EmbeddingOptions {
  /// Search nodes allowed per Hamiltonian-cycle enumeration.
  long long hamiltonian_budget = 100'000'000;
  /// Hamiltonian cycles tried per leaf before giving up.
  int max_leaf_cycles = 5000;
  /// Backtracking nodes for one exact page search on a fixed spine.
  long long page_search_budget = 2'000'000;
  DecompositionConfig decomposition{};
};

// ---------------------------------------------------------------------------
// Hamiltonian cycles

enum class SearchStatus { Exhausted, Stopped, BudgetExceeded };

/// Calls visit(cycle) for every Hamiltonian cycle that starts at vertex 0,
/// in lexicographic order of the cycle. visit returns true to stop.
///
/// Prunes a branch as soon as the unvisited vertices are no longer connected
/// to the path end, or some unvisited vertex has fewer than two usable
/// neighbors left.
template <typename Visit>
SearchStatus for_each_hamiltonian_cycle(const Graph& g, Visit&& visit, long long node_budget = 100'000'000) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return SearchStatus::Exhausted;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return SearchStatus::Exhausted;
  }
  if (const auto parts = bipartition(g); parts && parts->count(Side::A) != parts->count(Side::B)) {
    return SearchStatus::Exhausted;
  }

  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path{0};
  on_path[0] = 1;
  long long nodes = 0;
  std::vector<int> seen(n, 0);
  int stamp = 0;
  std::vector<Vertex> stack;

  // Every unvisited vertex must reach the path end through unvisited
  // vertices, and have two usable neighbors (unvisited, or a path end).
  auto feasible = [&]() {
    const Vertex end = path.back();
    const int remaining = n - static_cast<int>(path.size());
    if (remaining == 0) return g.has_edge(end, 0);
    for (Vertex x = 0; x < n; ++x) {
      if (on_path[x]) continue;
      int usable = 0;
      for (Vertex y : g.neighbors(x)) usable += !on_path[y] || y == end || y == 0;
      if (usable < 2) return false;
    }
    ++stamp;
    int reached = 0;
    stack.clear();
    for (Vertex y : g.neighbors(end)) {
      if (!on_path[y] && seen[y] != stamp) {
        seen[y] = stamp;
        stack.push_back(y);
      }
    }
    bool touches_start = false;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex y : g.neighbors(x)) {
        if (y == 0) touches_start = true;
        if (!on_path[y] && seen[y] != stamp) {
          seen[y] = stamp;
          stack.push_back(y);
        }
      }
    }
    return reached == remaining && touches_start;
  };

  bool stopped = false;
  bool exceeded = false;
  auto extend = [&](auto& self) -> void {
    if (stopped || exceeded) return;
    if (++nodes > node_budget) {
      exceeded = true;
      return;
    }
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(path.back(), 0) && visit(std::as_const(path))) stopped = true;
      return;
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      if (feasible()) self(self);
      path.pop_back();
      on_path[w] = 0;
      if (stopped || exceeded) return;
    }
  };
  extend(extend);
  if (stopped) return SearchStatus::Stopped;
  return exceeded ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
}

/// First Hamiltonian cycle as a spine order, or nullopt if there is none.
/// Throws Unsupported if the search budget runs out first.
[[nodiscard]] inline std::optional<SpineOrder> hamiltonian_order(const Graph& g,
                                                                 long long node_budget = 100'000'000) {
  std::optional<SpineOrder> found;
  const auto status = for_each_hamiltonian_cycle(
      g,
      [&](const std::vector<Vertex>& cycle) {
        found = SpineOrder(cycle);
        return true;
      },
      node_budget);
  if (status == SearchStatus::BudgetExceeded) {
    throw Unsupported("Hamiltonian search budget exhausted; sub-Hamiltonian construction not implemented");
  }
  return found;
}

// ---------------------------------------------------------------------------
// Ladder and join placement

/// Spine pattern of a ladder: rung i (1-based) is placed y_i, x_i when i is
/// odd and x_i, y_i when i is even, giving y1 x1 x2 y2 y3 x3 x4 y4 ...
[[nodiscard]] inline std::vector<Vertex> ladder_sequence(const Ladder& ladder) {
  std::vector<Vertex> out;
  out.reserve(2 * ladder.k());
  for (int i = 0; i < ladder.k(); ++i) {
    if (i % 2 == 0) {
      out.push_back(ladder.y[i]);
      out.push_back(ladder.x[i]);
    } else {
      out.push_back(ladder.x[i]);
      out.push_back(ladder.y[i]);
    }
  }
  return out;
}

/// The pattern over gen_ladder(k)'s ids (x_i = 2i, y_i = 2i+1).
[[nodiscard]] inline SpineOrder ladder_order(int k) {
  Ladder ladder;
  for (int i = 0; i < k; ++i) {
    ladder.x.push_back(2 * i);
    ladder.y.push_back(2 * i + 1);
  }
  return SpineOrder(ladder_sequence(ladder));
}

namespace detail {

inline std::vector<Vertex> rotate_to_front(std::span<const Vertex> seq, Vertex first) {
  const auto it = std::find(seq.begin(), seq.end(), first);
  if (it == seq.end()) throw InvalidInput("splice: attach vertex " + std::to_string(first) + " missing from child order");
  std::vector<Vertex> out(it, seq.end());
  out.insert(out.end(), seq.begin(), it);
  return out;
}

inline std::vector<Vertex> rotate_to_back(std::span<const Vertex> seq, Vertex last) {
  auto out = rotate_to_front(seq, last);
  std::rotate(out.begin(), out.begin() + 1, out.end());
  return out;
}

}  // namespace detail

/// Combines the child orders (already in the join node's vertex ids) around
/// the ladder pattern. Children are only rotated, which keeps their own
/// embeddings valid:
///   k >= 1: v ends the left block so v sits next to y1; the right block starts
///           with n next to yk (k even) or with m next to xk (k odd, where the
///           ladder pattern ends in xk);
///   k = 0:  u ends the left block and m starts the right block, nesting
///           (u,m) inside (v,n).
[[nodiscard]] inline SpineOrder splice(std::span<const Vertex> left, std::span<const Vertex> ladder,
                                       std::span<const Vertex> right, const JoinRecord& rec) {
  const int k = rec.k();
  std::vector<Vertex> out = detail::rotate_to_back(left, k == 0 ? rec.u : rec.v);
  out.insert(out.end(), ladder.begin(), ladder.end());
  const Vertex right_first = (k >= 1 && k % 2 == 0) ? rec.n : rec.m;
  const auto r = detail::rotate_to_front(right, right_first);
  out.insert(out.end(), r.begin(), r.end());
  return SpineOrder(std::move(out));
}

/// Spine order plus a proper 3-edge-coloring whose classes are the pages.
struct Layout {
  SpineOrder spine;
  EdgeColoring coloring;
};

/// Layout of a single leaf: Hamiltonian spine with pages from the induced
/// 3-edge-coloring of its faces. Cycles whose color classes cross are skipped,
/// after trying an exact page search on the same spine.
[[nodiscard]] inline Layout leaf_layout(const Graph& leaf, const EmbeddingOptions& options = {}) {
  const auto emb = planar_embedding(leaf);
  if (!emb) throw InvalidInput("leaf graph is not planar");
  const auto induced = induced_edge_coloring(*emb, three_face_coloring(*emb));
  std::optional<Layout> found;
  int tried = 0;
  const auto status = for_each_hamiltonian_cycle(
      leaf,
      [&](const std::vector<Vertex>& cycle) {
        SpineOrder spine(cycle);
        BookEmbedding be{spine, {}};
        for (const auto c : induced.color) be.page.push_back(static_cast<int>(c));
        if (is_valid_matching_book_embedding(leaf, be, 3)) {
          found = Layout{std::move(spine), induced};
          return true;
        }
        const auto exact = exact_pages(leaf, spine, 3, options.page_search_budget);
        if (exact.colors) {
          EdgeColoring ec;
          for (int c : *exact.colors) ec.color.push_back(static_cast<EdgeColor>(c));
          found = Layout{std::move(spine), std::move(ec)};
          return true;
        }
        return ++tried >= options.max_leaf_cycles;
      },
      options.hamiltonian_budget);
  if (found) return *found;
  if (status == SearchStatus::BudgetExceeded || tried == 0) {
    throw Unsupported("leaf with " + std::to_string(leaf.order()) +
                      " vertices has no Hamiltonian spine within budget; sub-Hamiltonian construction not implemented");
  }
  throw InternalError("no Hamiltonian spine of a " + std::to_string(leaf.order()) +
                      "-vertex leaf admits a 3-page matching layout");
}

namespace detail {

inline Layout assemble_node(const DecompositionTree& tree, int index, const std::vector<std::optional<Layout>>& leaves,
                            const EmbeddingOptions& options) {
  const auto& node = tree.nodes[index];
  if (node.is_leaf()) {
    if (leaves[index]) return *leaves[index];
    return leaf_layout(node.graph, options);
  }
  const JoinRecord& rec = *node.join;
  const int k = rec.k();
  const Graph& g = node.graph;
  const Layout left = assemble_node(tree, node.left, leaves, options);
  const Layout right = assemble_node(tree, node.right, leaves, options);
  const Graph& left_graph = tree.nodes[node.left].graph;
  const Graph& right_graph = tree.nodes[node.right].graph;

  auto lift_order = [](const SpineOrder& s, const std::vector<Vertex>& to_parent) {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex x : s.order()) out.push_back(to_parent[x]);
    return out;
  };
  Layout out;
  out.spine = splice(lift_order(left.spine, node.left_to_parent), ladder_sequence(rec.ladder),
                     lift_order(right.spine, node.right_to_parent), rec);

  std::vector<int> page(g.size(), -1);
  auto page_of = [](const Graph& child, const Layout& layout, const std::vector<Vertex>& to_parent, Vertex a, Vertex b) {
    const auto la = std::find(to_parent.begin(), to_parent.end(), a) - to_parent.begin();
    const auto lb = std::find(to_parent.begin(), to_parent.end(), b) - to_parent.begin();
    return static_cast<int>(layout.coloring.color[child.edge_index(static_cast<Vertex>(la), static_cast<Vertex>(lb))]);
  };
  // Gauge: the left child fixes page P on (u,v); the right child is permuted
  // so that (m,n) lands on the page its connectors need.
  const int p = page_of(left_graph, left, node.left_to_parent, rec.u, rec.v);
  const int r = p == 0 ? 1 : 0;
  const int q = 3 - p - r;
  const int right_target = (k % 2 == 0) ? p : q;
  const int right_current = page_of(right_graph, right, node.right_to_parent, rec.m, rec.n);
  std::array<int, 3> right_map{0, 1, 2};
  std::swap(right_map[right_current], right_map[right_target]);

  auto copy_child = [&](const Graph& child, const Layout& layout, const std::vector<Vertex>& to_parent,
                        const std::array<int, 3>& map, Edge skip) {
    for (int e = 0; e < child.size(); ++e) {
      const Edge lifted = make_edge(to_parent[child.edge(e).u], to_parent[child.edge(e).v]);
      if (lifted == skip) continue;
      page[g.edge_index(lifted.u, lifted.v)] = map[static_cast<int>(layout.coloring.color[e])];
    }
  };
  copy_child(left_graph, left, node.left_to_parent, {0, 1, 2}, make_edge(rec.u, rec.v));
  copy_child(right_graph, right, node.right_to_parent, right_map, make_edge(rec.m, rec.n));

  const auto& x = rec.ladder.x;
  const auto& y = rec.ladder.y;
  for (int i = 0; i < k; ++i) {
    page[g.edge_index(x[i], y[i])] = r;
    if (i + 1 < k) {
      // rails between rung i+1 and i+2 (1-based): odd index -> q, even -> p
      const int rail = (i % 2 == 0) ? q : p;
      page[g.edge_index(x[i], x[i + 1])] = rail;
      page[g.edge_index(y[i], y[i + 1])] = rail;
    }
  }
  const auto connectors = rec.connectors();
  for (std::size_t c = 0; c < connectors.size(); ++c) {
    const bool right_side = k >= 1 && c >= 2;
    page[g.edge_index(connectors[c].u, connectors[c].v)] = right_side ? right_target : p;
  }
  out.coloring.color.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) {
    ensure(page[e] >= 0, "assemble: edge " + edge_key(g.edge(e)) + " left without a page");
    out.coloring.color.push_back(static_cast<EdgeColor>(page[e]));
  }
  return out;
}

}  // namespace detail

/// Bottom-up splice of leaf layouts. `leaves[i]`, when set, overrides the
/// computed layout of leaf node i.
[[nodiscard]] inline Layout assemble(const DecompositionTree& tree, const std::vector<std::optional<Layout>>& leaves,
                                     const EmbeddingOptions& options = {}) {
  return detail::assemble_node(tree, 0, leaves, options);
}

[[nodiscard]] inline Layout assemble(const DecompositionTree& tree, const EmbeddingOptions& options = {}) {
  return assemble(tree, std::vector<std::optional<Layout>>(tree.nodes.size()), options);
}

/// page(e) = color(e). If that is not a valid matching layout on three pages,
/// falls back to an exact page search on the same spine.
[[nodiscard]] inline BookEmbedding assign_pages(const Graph& g, const SpineOrder& spine, const EdgeColoring& ec,
                                                const EmbeddingOptions& options = {}) {
  if (static_cast<int>(ec.color.size()) != g.size()) throw InvalidInput("assign_pages: coloring does not cover the graph");
  BookEmbedding be{spine, {}};
  be.page.reserve(g.size());
  for (const auto c : ec.color) be.page.push_back(static_cast<int>(c));
  if (is_valid_matching_book_embedding(g, be, 3)) return be;

  const auto exact = exact_pages(g, spine, 3, options.page_search_budget);
  if (exact.colors) {
    be.page = *exact.colors;
    return be;
  }
  detail::require_bcp(g);
  throw InternalError(exact.budget_exhausted ? "assign_pages: exact page search ran out of budget"
                                             : "assign_pages: spine admits no 3-page matching layout");
}

/// 3-page matching book embedding of a connected BCP graph. Throws
/// InvalidInput naming the failed predicate for other inputs.
[[nodiscard]] inline BookEmbedding embed(const Graph& g, const EmbeddingOptions& options = {}) {
  detail::require_bcp(g);
  const auto tree = ternary_decompose(g, options.decomposition);
  const Layout layout = assemble(tree, options);
  BookEmbedding be = assign_pages(g, layout.spine, layout.coloring, options);
  detail::ensure(is_valid_matching_book_embedding(g, be, 3), "embed: result failed verification");
  detail::ensure(be.page_count() == 3, "embed: result does not use exactly three pages");
  return be;
}

}  // namespace bcp
