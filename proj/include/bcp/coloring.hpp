#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bcp/errors.hpp"
#include "bcp/graph.hpp"
#include "bcp/planar.hpp"

namespace bcp {

enum class FaceColor : std::uint8_t { E1 = 0, E2 = 1, E3 = 2 };

/// Pair labels induced by two distinct face colors. The underlying value is
/// also the page index the embedding stage uses for that color class.
enum class EdgeColor : std::uint8_t { E1E2 = 0, E1E3 = 1, E2E3 = 2 };

[[nodiscard]] constexpr std::string_view to_string(FaceColor c) {
  constexpr std::array<std::string_view, 3> names{"E1", "E2", "E3"};
  return names[static_cast<int>(c)];
}

[[nodiscard]] constexpr std::string_view to_string(EdgeColor c) {
  constexpr std::array<std::string_view, 3> names{"E1+E2", "E1+E3", "E2+E3"};
  return names[static_cast<int>(c)];
}

[[nodiscard]] constexpr EdgeColor combine(FaceColor a, FaceColor b) {
  const int lo = std::min(static_cast<int>(a), static_cast<int>(b));
  const int hi = std::max(static_cast<int>(a), static_cast<int>(b));
  if (lo == 0 && hi == 1) return EdgeColor::E1E2;
  if (lo == 0 && hi == 2) return EdgeColor::E1E3;
  return EdgeColor::E2E3;
}

struct FaceColoring {
  std::vector<Face> faces;
  std::vector<FaceColor> color;  // indexed by face id
};

/// Indexed like Graph::edges().
struct EdgeColoring {
  std::vector<EdgeColor> color;
};

/// Face adjacency lists (one entry per shared edge, so duplicates are kept).
[[nodiscard]] inline std::vector<std::vector<int>> face_adjacency(const Graph& g,
                                                                  std::span<const Face> face_list) {
  std::vector<std::vector<int>> adj(face_list.size());
  for (const auto& [a, b] : faces_of_edges(g, face_list)) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

/// Proper 3-coloring of the faces by backtracking with unit propagation.
///
/// The label gauge is fixed deterministically: the highest-degree face (lowest
/// id on ties) gets E1 and its lowest-indexed neighbor gets E2. Throws
/// InvalidInput when no 3-coloring exists, which cannot happen for an
/// embedding of a connected BCP graph.
[[nodiscard]] inline FaceColoring three_face_coloring(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph();
  FaceColoring result;
  result.faces = faces(emb);
  const int f_count = static_cast<int>(result.faces.size());
  const auto adj = face_adjacency(g, result.faces);
  for (int f = 0; f < f_count; ++f) {
    if (std::find(adj[f].begin(), adj[f].end(), f) != adj[f].end()) {
      throw InvalidInput("input is not a valid BCP embedding: face " + std::to_string(f) +
                         " borders itself across a bridge");
    }
  }
  if (f_count == 0) return result;

  std::vector<int> by_degree(f_count);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return adj[a].size() > adj[b].size(); });

  // domain bitmask per face, 0b111 = all three labels open
  std::vector<std::uint8_t> domain(f_count, 0b111);
  std::vector<int> assigned(f_count, -1);
  struct Change {
    int face;
    std::uint8_t old_domain;
    int old_assigned;
  };
  std::vector<Change> trail;

  // Assign and propagate; returns false on a wipe-out.
  auto assign = [&](int face, int label) {
    std::vector<std::pair<int, int>> work{{face, label}};
    while (!work.empty()) {
      const auto [f, c] = work.back();
      work.pop_back();
      if (assigned[f] == c) continue;
      if (assigned[f] != -1 || !(domain[f] & (1u << c))) return false;
      trail.push_back({f, domain[f], assigned[f]});
      assigned[f] = c;
      domain[f] = static_cast<std::uint8_t>(1u << c);
      for (int h : adj[f]) {
        if (assigned[h] == c) return false;
        if (assigned[h] != -1 || !(domain[h] & (1u << c))) continue;
        trail.push_back({h, domain[h], assigned[h]});
        domain[h] = static_cast<std::uint8_t>(domain[h] & ~(1u << c));
        if (domain[h] == 0) return false;
        if (std::popcount(domain[h]) == 1) work.emplace_back(h, std::countr_zero(domain[h]));
      }
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      const auto ch = trail.back();
      trail.pop_back();
      domain[ch.face] = ch.old_domain;
      assigned[ch.face] = ch.old_assigned;
    }
  };

  const int first = by_degree.front();
  bool ok = assign(first, 0);
  if (ok && !adj[first].empty()) {
    ok = assign(*std::min_element(adj[first].begin(), adj[first].end()), 1);
  }
  if (!ok) throw InvalidInput("input is not a valid BCP embedding: faces are not 3-colorable");

  // Depth-first search over the most constrained unassigned face.
  auto pick = [&]() {
    int best = -1;
    for (int f : by_degree) {
      if (assigned[f] != -1) continue;
      if (best < 0 || std::popcount(domain[f]) < std::popcount(domain[best])) best = f;
    }
    return best;
  };
  auto search = [&](auto& self) -> bool {
    const int f = pick();
    if (f < 0) return true;
    for (int c = 0; c < 3; ++c) {
      if (!(domain[f] & (1u << c))) continue;
      const std::size_t mark = trail.size();
      if (assign(f, c) && self(self)) return true;
      undo_to(mark);
    }
    return false;
  };
  if (!search(search)) {
    throw InvalidInput("input is not a valid BCP embedding: faces are not 3-colorable");
  }
  result.color.reserve(f_count);
  for (int f = 0; f < f_count; ++f) result.color.push_back(static_cast<FaceColor>(assigned[f]));
  return result;
}

[[nodiscard]] inline bool is_proper_face_coloring(const Graph& g, const FaceColoring& fc) {
  for (const auto& [a, b] : faces_of_edges(g, fc.faces)) {
    if (fc.color[a] == fc.color[b]) return false;
  }
  return true;
}

/// Labels every edge with the pair of colors of its two incident faces.
/// Throws InternalError if some edge separates two faces of the same color.
[[nodiscard]] inline EdgeColoring induced_edge_coloring(const PlanarEmbedding& emb, const FaceColoring& fc) {
  const Graph& g = emb.graph();
  const auto sides = faces_of_edges(g, fc.faces);
  EdgeColoring ec;
  ec.color.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) {
    const auto [a, b] = sides[e];
    if (fc.color[a] == fc.color[b]) {
      throw InternalError("invalid face coloring: both sides of edge " + edge_key(g.edge(e)) +
                          " have color " + std::string(to_string(fc.color[a])));
    }
    ec.color.push_back(combine(fc.color[a], fc.color[b]));
  }
  return ec;
}

/// True iff no two edges sharing an endpoint have the same label.
[[nodiscard]] inline bool verify_edge_coloring(const Graph& g, const EdgeColoring& ec) {
  if (static_cast<int>(ec.color.size()) != g.size()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::array<int, 3> seen{0, 0, 0};
    for (Vertex w : g.neighbors(v)) {
      if (++seen[static_cast<int>(ec.color[g.edge_index(v, w)])] > 1) return false;
    }
  }
  return true;
}

/// Relabels face colors by `perm` (perm[old] = new) and returns the induced
/// permutation on edge labels.
[[nodiscard]] constexpr std::array<EdgeColor, 3> induced_label_map(std::array<FaceColor, 3> perm) {
  return {combine(perm[0], perm[1]), combine(perm[0], perm[2]), combine(perm[1], perm[2])};
}

}  // namespace bcp
