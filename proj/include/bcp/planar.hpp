#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcp/errors.hpp"
#include "bcp/graph.hpp"

namespace bcp {

/// Directed edge (half-edge).
struct Dart {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Dart&) const = default;
};

/// Rotation system: the cyclic order of neighbors around every vertex.
///
/// Faces are traced with the rule "after arriving at b from a, leave b towards
/// the neighbor that follows a in b's rotation".
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  /// Throws InvalidInput unless rotation[v] is a permutation of v's neighbors.
  PlanarEmbedding(Graph graph, std::vector<std::vector<Vertex>> rotation)
      : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    if (static_cast<int>(rotation_.size()) != graph_.order()) {
      throw InvalidInput("rotation system size does not match vertex count");
    }
    position_.resize(graph_.order());
    for (Vertex v = 0; v < graph_.order(); ++v) {
      auto sorted = rotation_[v];
      std::sort(sorted.begin(), sorted.end());
      const auto nb = graph_.neighbors(v);
      if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
        throw InvalidInput("rotation at vertex " + std::to_string(v) +
                           " is not a permutation of its neighbors");
      }
      // position_[v][i] = index of neighbors(v)[i] within rotation_[v]
      position_[v].resize(nb.size());
      for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
        const auto it = std::lower_bound(nb.begin(), nb.end(), rotation_[v][i]);
        position_[v][it - nb.begin()] = i;
      }
    }
  }

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }

  /// Neighbor of v that follows w in v's cyclic order.
  [[nodiscard]] Vertex successor(Vertex v, Vertex w) const {
    const auto nb = graph_.neighbors(v);
    const auto it = std::lower_bound(nb.begin(), nb.end(), w);
    const int pos = position_[v][it - nb.begin()];
    return rotation_[v][(pos + 1) % rotation_[v].size()];
  }

  [[nodiscard]] Dart next_in_face(const Dart& d) const { return {d.to, successor(d.to, d.from)}; }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<int>> position_;
};

struct Face {
  int id = 0;
  std::vector<Dart> boundary;

  [[nodiscard]] int length() const { return static_cast<int>(boundary.size()); }
};

/// Traces every face of the rotation system; each dart lands in exactly one.
[[nodiscard]] inline std::vector<Face> faces(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph();
  // visited[edge][0] for u->v, [1] for v->u
  std::vector<std::array<char, 2>> visited(g.size(), {0, 0});
  auto slot = [&](const Dart& d) -> char& {
    const int e = g.edge_index(d.from, d.to);
    return visited[e][d.from < d.to ? 0 : 1];
  };
  std::vector<Face> result;
  for (const auto& e : g.edges()) {
    for (const Dart start : {Dart{e.u, e.v}, Dart{e.v, e.u}}) {
      if (slot(start)) continue;
      Face face;
      face.id = static_cast<int>(result.size());
      Dart d = start;
      do {
        slot(d) = 1;
        face.boundary.push_back(d);
        d = emb.next_in_face(d);
      } while (d != start);
      result.push_back(std::move(face));
    }
  }
  return result;
}

/// For every edge index, the faces containing dart u->v and v->u.
[[nodiscard]] inline std::vector<std::pair<int, int>> faces_of_edges(const Graph& g,
                                                                     std::span<const Face> face_list) {
  std::vector<std::pair<int, int>> result(g.size(), {-1, -1});
  for (const auto& f : face_list) {
    for (const auto& d : f.boundary) {
      const int e = g.edge_index(d.from, d.to);
      (d.from < d.to ? result[e].first : result[e].second) = f.id;
    }
  }
  return result;
}

/// V - E + F summed over the faces of the embedding; 2 for a connected plane graph.
[[nodiscard]] inline int euler_characteristic(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph();
  return g.order() - g.size() + static_cast<int>(faces(emb).size());
}

namespace detail {

/// Demoucron-Malgrange-Pertuiset path insertion on a 2-connected graph.
/// Returns oriented face cycles, or nullopt if the graph is not planar.
inline std::optional<std::vector<std::vector<Vertex>>> embed_biconnected(const Graph& g) {
  const int n = g.order();
  if (g.size() < n) return std::vector<std::vector<Vertex>>{};

  // Initial cycle through edge (0, w).
  const Vertex w = g.neighbors(0)[0];
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue{w};
  parent[w] = w;
  for (std::size_t head = 0; head < queue.size() && parent[0] == -1; ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (parent[y] != -1 || (x == w && y == 0)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  ensure(parent[0] != -1, "embed_biconnected: input is not 2-connected");
  std::vector<Vertex> cycle;
  for (Vertex x = 0; x != w; x = parent[x]) cycle.push_back(x);
  cycle.push_back(w);

  std::vector<char> vertex_in(n, 0);
  std::vector<char> edge_in(g.size(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    vertex_in[cycle[i]] = 1;
    edge_in[g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()])] = 1;
  }
  int embedded_edges = static_cast<int>(cycle.size());
  std::vector<std::vector<Vertex>> face_list{cycle, std::vector<Vertex>(cycle.rbegin(), cycle.rend())};

  struct Fragment {
    std::vector<Vertex> attachments;
    std::vector<Vertex> interior;  // empty for a chord
  };

  std::vector<int> comp(n);
  std::vector<int> mark(n, -1);
  while (embedded_edges < g.size()) {
    std::vector<Fragment> fragments;
    for (int e = 0; e < g.size(); ++e) {
      const auto& ed = g.edge(e);
      if (!edge_in[e] && vertex_in[ed.u] && vertex_in[ed.v]) fragments.push_back({{ed.u, ed.v}, {}});
    }
    std::fill(comp.begin(), comp.end(), -1);
    for (Vertex s = 0; s < n; ++s) {
      if (vertex_in[s] || comp[s] != -1) continue;
      Fragment frag;
      const int id = static_cast<int>(fragments.size());
      comp[s] = id;
      std::vector<Vertex> stack{s};
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        frag.interior.push_back(x);
        for (Vertex y : g.neighbors(x)) {
          if (vertex_in[y]) {
            if (mark[y] != id) {
              mark[y] = id;
              frag.attachments.push_back(y);
            }
          } else if (comp[y] == -1) {
            comp[y] = id;
            stack.push_back(y);
          }
        }
      }
      fragments.push_back(std::move(frag));
    }
    std::fill(mark.begin(), mark.end(), -1);

    std::vector<std::vector<char>> in_face(face_list.size(), std::vector<char>(n, 0));
    for (std::size_t f = 0; f < face_list.size(); ++f) {
      for (Vertex x : face_list[f]) in_face[f][x] = 1;
    }
    int chosen = -1;
    int chosen_face = -1;
    for (int i = 0; i < static_cast<int>(fragments.size()); ++i) {
      int admissible = 0;
      int first = -1;
      for (int f = 0; f < static_cast<int>(face_list.size()); ++f) {
        const bool ok = std::all_of(fragments[i].attachments.begin(), fragments[i].attachments.end(),
                                    [&](Vertex a) { return in_face[f][a] != 0; });
        if (ok) {
          if (first < 0) first = f;
          ++admissible;
        }
      }
      if (admissible == 0) return std::nullopt;
      if (admissible == 1) {
        chosen = i;
        chosen_face = first;
        break;
      }
      if (chosen < 0) {
        chosen = i;
        chosen_face = first;
      }
    }

    // Path through the fragment between two distinct attachments.
    const Fragment& frag = fragments[chosen];
    std::vector<Vertex> path;
    if (frag.interior.empty()) {
      path = frag.attachments;
    } else {
      ensure(frag.attachments.size() >= 2, "embed_biconnected: fragment with a single attachment");
      const Vertex a = frag.attachments[0];
      const Vertex b = frag.attachments[1];
      const int id = comp[frag.interior[0]];
      std::vector<Vertex> prev(n, -1);
      std::vector<Vertex> bfs;
      for (Vertex c : g.neighbors(a)) {
        if (!vertex_in[c] && comp[c] == id) {
          prev[c] = c;
          bfs.push_back(c);
          break;
        }
      }
      Vertex end = -1;
      for (std::size_t head = 0; head < bfs.size() && end < 0; ++head) {
        const Vertex x = bfs[head];
        if (g.has_edge(x, b)) {
          end = x;
          break;
        }
        for (Vertex y : g.neighbors(x)) {
          if (!vertex_in[y] && prev[y] == -1) {
            prev[y] = x;
            bfs.push_back(y);
          }
        }
      }
      ensure(end >= 0, "embed_biconnected: fragment path not found");
      std::vector<Vertex> middle;
      for (Vertex x = end;; x = prev[x]) {
        middle.push_back(x);
        if (prev[x] == x) break;
      }
      path.push_back(a);
      path.insert(path.end(), middle.rbegin(), middle.rend());
      path.push_back(b);
    }

    const auto face = face_list[chosen_face];
    const int len = static_cast<int>(face.size());
    const int i = static_cast<int>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const int j = static_cast<int>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    std::vector<Vertex> first_half;
    std::vector<Vertex> second_half;
    for (int t = i;; t = (t + 1) % len) {
      first_half.push_back(face[t]);
      if (t == j) break;
    }
    for (int t = static_cast<int>(path.size()) - 2; t >= 1; --t) first_half.push_back(path[t]);
    for (int t = j;; t = (t + 1) % len) {
      second_half.push_back(face[t]);
      if (t == i) break;
    }
    for (int t = 1; t + 1 < static_cast<int>(path.size()); ++t) second_half.push_back(path[t]);
    face_list[chosen_face] = std::move(first_half);
    face_list.push_back(std::move(second_half));

    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      vertex_in[path[t]] = 1;
      edge_in[g.edge_index(path[t], path[t + 1])] = 1;
      ++embedded_edges;
    }
    vertex_in[path.back()] = 1;
  }
  return face_list;
}

/// Biconnected components as lists of edge indices.
inline std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto nb = g.neighbors(top.v);
      if (top.next < nb.size()) {
        const Vertex y = nb[top.next++];
        const int e = g.edge_index(top.v, y);
        if (e == top.parent_edge) continue;
        if (disc[y] == -1) {
          edge_stack.push_back(e);
          disc[y] = low[y] = timer++;
          stack.push_back({y, e, 0});
        } else if (disc[y] < disc[top.v]) {
          edge_stack.push_back(e);
          low[top.v] = std::min(low[top.v], disc[y]);
        }
      } else {
        const Frame done = top;
        stack.pop_back();
        if (stack.empty()) break;
        const Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] >= disc[p]) {
          std::vector<int> block;
          while (true) {
            const int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == done.parent_edge) break;
          }
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

}  // namespace detail

/// Planar rotation system for a connected graph, or nullopt if the graph is
/// not planar. Blocks are embedded independently by path insertion and glued
/// at cut vertices. Throws InvalidInput on disconnected input.
[[nodiscard]] inline std::optional<PlanarEmbedding> planar_embedding(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("planar_embedding: graph is disconnected");
  const int n = g.order();
  std::vector<std::vector<Vertex>> rotation(n);
  for (const auto& block : detail::biconnected_blocks(g)) {
    std::vector<Vertex> vertices;
    for (int e : block) {
      vertices.push_back(g.edge(e).u);
      vertices.push_back(g.edge(e).v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (block.size() == 1) {
      const auto& e = g.edge(block[0]);
      rotation[e.u].push_back(e.v);
      rotation[e.v].push_back(e.u);
      continue;
    }
    const auto sub = induced_subgraph(g, vertices);
    const auto face_cycles = detail::embed_biconnected(sub.graph);
    if (!face_cycles) return std::nullopt;
    // succ[b][a] = c whenever a -> b -> c appears in a face cycle.
    const int k = sub.graph.order();
    std::vector<std::vector<std::pair<Vertex, Vertex>>> succ(k);
    for (const auto& cyc : *face_cycles) {
      const int len = static_cast<int>(cyc.size());
      for (int t = 0; t < len; ++t) {
        succ[cyc[(t + 1) % len]].emplace_back(cyc[t], cyc[(t + 2) % len]);
      }
    }
    for (Vertex b = 0; b < k; ++b) {
      auto& s = succ[b];
      std::sort(s.begin(), s.end());
      detail::ensure(static_cast<int>(s.size()) == sub.graph.degree(b),
                     "planar_embedding: inconsistent face cycles");
      Vertex a = s.front().first;
      std::vector<Vertex> order;
      for (int t = 0; t < static_cast<int>(s.size()); ++t) {
        order.push_back(sub.to_parent[a]);
        const auto it = std::lower_bound(s.begin(), s.end(), std::pair<Vertex, Vertex>{a, -1});
        a = it->second;
      }
      detail::ensure(a == s.front().first, "planar_embedding: rotation is not a single cycle");
      auto& dst = rotation[sub.to_parent[b]];
      dst.insert(dst.end(), order.begin(), order.end());
    }
  }
  PlanarEmbedding emb(g, std::move(rotation));
  detail::ensure(n == 0 || euler_characteristic(emb) == 2, "planar_embedding: Euler check failed");
  return emb;
}

[[nodiscard]] inline bool is_planar(const Graph& g) { return planar_embedding(g).has_value(); }

/// Dual multigraph: one vertex per face, one dual edge per primal edge.
struct DualGraph {
  int face_count = 0;
  /// dual_edges[e] joins the two faces on either side of primal edge e.
  std::vector<std::pair<int, int>> dual_edges;
  /// Cyclic order of primal edge indices around each dual vertex.
  std::vector<std::vector<int>> rotation;

  [[nodiscard]] int degree(int f) const { return static_cast<int>(rotation[f].size()); }
};

[[nodiscard]] inline DualGraph dual(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph();
  const auto face_list = faces(emb);
  DualGraph d;
  d.face_count = static_cast<int>(face_list.size());
  d.dual_edges = faces_of_edges(g, face_list);
  d.rotation.resize(face_list.size());
  for (const auto& f : face_list) {
    for (const auto& dart : f.boundary) d.rotation[f.id].push_back(g.edge_index(dart.from, dart.to));
  }
  return d;
}

/// Lengths of the faces of the dual, traced through its rotation. Requires a
/// bridgeless primal (no dual loops).
[[nodiscard]] inline std::vector<int> dual_face_lengths(const DualGraph& d) {
  const int m = static_cast<int>(d.dual_edges.size());
  std::vector<std::array<int, 2>> pos(m, {-1, -1});
  for (int f = 0; f < d.face_count; ++f) {
    for (int i = 0; i < d.degree(f); ++i) {
      const int e = d.rotation[f][i];
      auto& slot = pos[e];
      if (d.dual_edges[e].first == d.dual_edges[e].second) {
        throw InvalidInput("dual_face_lengths: primal graph has a bridge");
      }
      slot[f == d.dual_edges[e].first ? 0 : 1] = i;
    }
  }
  // A dual dart is (edge, side) travelling from that side's face to the other.
  std::vector<std::array<char, 2>> used(m, {0, 0});
  std::vector<int> lengths;
  for (int e0 = 0; e0 < m; ++e0) {
    for (int s0 = 0; s0 < 2; ++s0) {
      if (used[e0][s0]) continue;
      int e = e0;
      int s = s0;
      int len = 0;
      while (!used[e][s]) {
        used[e][s] = 1;
        ++len;
        const int target_side = 1 - s;
        const int target = target_side == 0 ? d.dual_edges[e].first : d.dual_edges[e].second;
        const int next_e = d.rotation[target][(pos[e][target_side] + 1) % d.degree(target)];
        s = d.dual_edges[next_e].first == target ? 0 : 1;
        e = next_e;
      }
      lengths.push_back(len);
    }
  }
  return lengths;
}

}  // namespace bcp
