#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcp/book.hpp"
#include "bcp/errors.hpp"
#include "bcp/graph.hpp"

namespace bcp {

/// Two edges cross iff their spine positions interleave. Edges sharing an
/// endpoint never cross; the matching rule covers them.
[[nodiscard]] inline bool edges_cross(const SpineOrder& spine, const Edge& e1, const Edge& e2) {
  if (e1.touches(e2.u) || e1.touches(e2.v)) return false;
  int a = spine.position(e1.u), b = spine.position(e1.v);
  int c = spine.position(e2.u), d = spine.position(e2.v);
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

enum class ViolationKind : std::uint8_t { Crossing, MatchingDegree, PageOutOfRange };

[[nodiscard]] constexpr std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Crossing: return "crossing";
    case ViolationKind::MatchingDegree: return "matching-degree";
    case ViolationKind::PageOutOfRange: return "page-out-of-range";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind = ViolationKind::Crossing;
  int page = 0;
  Edge first{};       // crossing, page-out-of-range
  Edge second{};      // crossing
  Vertex vertex = -1; // matching-degree
};

/// All reasons `be` is not a matching book embedding of g on `pages` pages.
/// Throws InvalidInput if the spine or the page list does not cover g.
[[nodiscard]] inline std::vector<Violation> verify_matching_book_embedding(const Graph& g, const BookEmbedding& be,
                                                                          int pages) {
  if (be.spine.size() != g.order()) throw InvalidInput("embedding spine does not cover every vertex");
  if (static_cast<int>(be.page.size()) != g.size()) throw InvalidInput("embedding does not cover every edge");
  std::vector<Violation> out;
  for (int e = 0; e < g.size(); ++e) {
    if (be.page[e] < 0 || be.page[e] >= pages) {
      out.push_back({ViolationKind::PageOutOfRange, be.page[e], g.edge(e), {}, -1});
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> pages_here;
    for (Vertex w : g.neighbors(v)) pages_here.push_back(be.page[g.edge_index(v, w)]);
    std::sort(pages_here.begin(), pages_here.end());
    for (std::size_t i = 0; i + 1 < pages_here.size(); ++i) {
      if (pages_here[i] == pages_here[i + 1] && (i == 0 || pages_here[i - 1] != pages_here[i])) {
        out.push_back({ViolationKind::MatchingDegree, pages_here[i], {}, {}, v});
      }
    }
  }
  for (int e = 0; e < g.size(); ++e) {
    for (int f = e + 1; f < g.size(); ++f) {
      if (be.page[e] == be.page[f] && edges_cross(be.spine, g.edge(e), g.edge(f))) {
        out.push_back({ViolationKind::Crossing, be.page[e], g.edge(e), g.edge(f), -1});
      }
    }
  }
  return out;
}

[[nodiscard]] inline bool is_valid_matching_book_embedding(const Graph& g, const BookEmbedding& be, int pages) {
  return verify_matching_book_embedding(g, be, pages).empty();
}

// ---------------------------------------------------------------------------
// Exact page assignment on a fixed spine: color the conflict graph whose
// vertices are edges and whose edges join pairs that cross or share an endpoint.

/// Adjacency lists over edge indices.
[[nodiscard]] inline std::vector<std::vector<int>> conflict_graph(const Graph& g, const SpineOrder& spine) {
  std::vector<std::vector<int>> adj(g.size());
  for (int e = 0; e < g.size(); ++e) {
    for (int f = e + 1; f < g.size(); ++f) {
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      if (a.touches(b.u) || a.touches(b.v) || edges_cross(spine, a, b)) {
        adj[e].push_back(f);
        adj[f].push_back(e);
      }
    }
  }
  return adj;
}

struct ColoringSearchResult {
  std::optional<std::vector<int>> colors;
  bool budget_exhausted = false;
};

/// Proper coloring with at most `k` colors by DSATUR-ordered backtracking.
/// Color indices are introduced in increasing order, so the search never
/// revisits a relabeling of a failed branch. A negative budget is unlimited.
[[nodiscard]] inline ColoringSearchResult color_graph(const std::vector<std::vector<int>>& adj, int k,
                                                      long long node_budget = -1) {
  const int n = static_cast<int>(adj.size());
  ColoringSearchResult result;
  if (n == 0) {
    result.colors = std::vector<int>{};
    return result;
  }
  if (k <= 0) return result;
  std::vector<int> color(n, -1);
  // neighbor_count[v * k + c]: colored neighbors of v using c
  std::vector<int> neighbor_count(static_cast<std::size_t>(n) * k, 0);
  std::vector<int> saturation(n, 0);
  long long nodes = 0;

  auto set_color = [&](int v, int c) {
    color[v] = c;
    for (int w : adj[v]) {
      if (neighbor_count[static_cast<std::size_t>(w) * k + c]++ == 0) ++saturation[w];
    }
  };
  auto clear_color = [&](int v) {
    const int c = color[v];
    for (int w : adj[v]) {
      if (--neighbor_count[static_cast<std::size_t>(w) * k + c] == 0) --saturation[w];
    }
    color[v] = -1;
  };
  auto search = [&](auto& self, int colored, int used) -> bool {
    if (colored == n) return true;
    if (node_budget >= 0 && ++nodes > node_budget) {
      result.budget_exhausted = true;
      return false;
    }
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      if (best < 0 || saturation[v] > saturation[best] ||
          (saturation[v] == saturation[best] && adj[v].size() > adj[best].size())) {
        best = v;
      }
    }
    if (saturation[best] >= k) return false;
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (neighbor_count[static_cast<std::size_t>(best) * k + c] != 0) continue;
      set_color(best, c);
      if (self(self, colored + 1, std::max(used, c + 1))) return true;
      clear_color(best);
      if (result.budget_exhausted) return false;
    }
    return false;
  };
  if (search(search, 0, 0)) result.colors = color;
  return result;
}

/// Pages for a fixed spine with at most `pages` pages, if any exist.
[[nodiscard]] inline ColoringSearchResult exact_pages(const Graph& g, const SpineOrder& spine, int pages,
                                                      long long node_budget = -1) {
  return color_graph(conflict_graph(g, spine), pages, node_budget);
}

// ---------------------------------------------------------------------------
// Exhaustive matching book thickness.

struct OracleOptions {
  /// Largest vertex count the enumeration accepts. 10 runs in well under a
  /// second per graph; 12 takes minutes.
  int vertex_limit = 10;
};

/// Raised when the oracle is asked to enumerate a graph above its limit.
class OracleRefused : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Exact mbt(g), or nullopt when it exceeds `page_bound`.
///
/// Enumerates spine orders with vertex 0 first and the second vertex smaller
/// than the last one (rotations and reflections are equivalent), and for each
/// checks whether the conflict graph can be colored with fewer pages than the
/// best so far. Stops as soon as the max-degree lower bound is met.
[[nodiscard]] inline std::optional<int> mbt_oracle(const Graph& g, int page_bound, OracleOptions options = {}) {
  const int n = g.order();
  if (n > options.vertex_limit) {
    throw OracleRefused("mbt_oracle: " + std::to_string(n) + " vertices exceeds the exhaustive limit of " +
                        std::to_string(options.vertex_limit));
  }
  if (g.size() == 0) return 0;
  const int lower = g.max_degree();
  if (lower > page_bound) return std::nullopt;
  int best = page_bound + 1;

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (n >= 3 && order[1] > order[n - 1]) continue;
    const SpineOrder spine(order);
    const auto adj = conflict_graph(g, spine);
    while (best - 1 >= lower && color_graph(adj, best - 1).colors) --best;
    if (best == lower) break;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  if (best > page_bound) return std::nullopt;
  return best;
}

}  // namespace bcp
