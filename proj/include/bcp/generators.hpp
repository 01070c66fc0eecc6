#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcp/errors.hpp"
#include "bcp/graph.hpp"
#include "bcp/planar.hpp"

namespace bcp {

/// C_m x K2. Vertices 0..m-1 form the outer cycle, m..2m-1 the inner one,
/// with spokes i -- m+i. Odd m is rejected because the result is not bipartite.
[[nodiscard]] inline Graph gen_prism(int m) {
  if (m < 4) throw InvalidInput("gen_prism: m must be at least 4");
  if (m % 2 != 0) throw InvalidInput("gen_prism: odd m gives a non-bipartite prism");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    pairs.emplace_back(i, (i + 1) % m);
    pairs.emplace_back(m + i, m + (i + 1) % m);
    pairs.emplace_back(i, m + i);
  }
  auto g = Graph::from_edge_list(2 * m, pairs);
  detail::ensure(is_bipartite(g), "gen_prism: result is not bipartite");
  return g;
}

[[nodiscard]] inline Graph gen_cube() { return gen_prism(4); }

/// Ladder T_k with x_i = 2i and y_i = 2i+1 (0-based i). k = 0 is the empty graph.
[[nodiscard]] inline Graph gen_ladder(int k) {
  if (k < 0) throw InvalidInput("gen_ladder: k must be non-negative");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    pairs.emplace_back(2 * i, 2 * i + 1);
    if (i > 0) {
      pairs.emplace_back(2 * i - 2, 2 * i);
      pairs.emplace_back(2 * i - 1, 2 * i + 1);
    }
  }
  return Graph::from_edge_list(2 * k, pairs);
}

[[nodiscard]] inline Graph gen_cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, pairs);
}

/// Where gen_join put everything: left keeps its ids, right is shifted by
/// left.order(), ladder rails follow.
struct JoinLayout {
  Graph graph;
  Vertex u = 0, v = 0, m = 0, n = 0;
  std::vector<Vertex> x, y;
};

namespace detail {

inline void require_bcp_input(const Graph& g, const char* which) {
  const std::string name(which);
  if (!is_connected(g)) throw InvalidInput("gen_join: " + name + " graph is disconnected");
  if (!is_cubic(g)) throw InvalidInput("gen_join: " + name + " graph is not cubic");
  if (!is_bipartite(g)) throw InvalidInput("gen_join: " + name + " graph is not bipartite");
  if (!is_planar(g)) throw InvalidInput("gen_join: " + name + " graph is not planar");
}

}  // namespace detail

/// M(left - (u,v), T_k, right - (m,n)) with connectors u-x1, v-y1, m-xk, n-yk
/// (or u-m, v-n for k = 0). The edges are ordered pairs: the orientation picks
/// which endpoint meets which rail.
[[nodiscard]] inline JoinLayout join_layout(const Graph& left, std::pair<Vertex, Vertex> e_left,
                                            const Graph& right, std::pair<Vertex, Vertex> e_right, int k) {
  if (k < 0) throw InvalidInput("gen_join: k must be non-negative");
  detail::require_bcp_input(left, "left");
  detail::require_bcp_input(right, "right");
  if (!left.has_edge(e_left.first, e_left.second)) throw InvalidInput("gen_join: left edge not in graph");
  if (!right.has_edge(e_right.first, e_right.second)) throw InvalidInput("gen_join: right edge not in graph");

  JoinLayout out;
  const int offset = left.order();
  const int base = offset + right.order();
  out.u = e_left.first;
  out.v = e_left.second;
  out.m = e_right.first + offset;
  out.n = e_right.second + offset;
  std::vector<std::pair<int, int>> pairs;
  const Edge cut_left = make_edge(e_left.first, e_left.second);
  const Edge cut_right = make_edge(e_right.first, e_right.second);
  for (const auto& e : left.edges()) {
    if (e != cut_left) pairs.emplace_back(e.u, e.v);
  }
  for (const auto& e : right.edges()) {
    if (e != cut_right) pairs.emplace_back(e.u + offset, e.v + offset);
  }
  for (int i = 0; i < k; ++i) {
    out.x.push_back(base + 2 * i);
    out.y.push_back(base + 2 * i + 1);
    pairs.emplace_back(out.x[i], out.y[i]);
    if (i > 0) {
      pairs.emplace_back(out.x[i - 1], out.x[i]);
      pairs.emplace_back(out.y[i - 1], out.y[i]);
    }
  }
  if (k == 0) {
    pairs.emplace_back(out.u, out.m);
    pairs.emplace_back(out.v, out.n);
  } else {
    pairs.emplace_back(out.u, out.x.front());
    pairs.emplace_back(out.v, out.y.front());
    pairs.emplace_back(out.m, out.x.back());
    pairs.emplace_back(out.n, out.y.back());
  }
  out.graph = Graph::from_edge_list(base + 2 * k, pairs);

  const auto parts = bipartition(out.graph);
  if (!parts) {
    throw InvalidInput("gen_join: parity mismatch, some connector joins two vertices of the same "
                       "bipartition class");
  }
  detail::ensure(is_cubic(out.graph), "gen_join: result is not cubic");
  detail::ensure(is_planar(out.graph), "gen_join: result is not planar");
  detail::ensure(edge_connectivity(out.graph) == 2, "gen_join: result is not 2-edge-connected");
  return out;
}

[[nodiscard]] inline Graph gen_join(const Graph& left, std::pair<Vertex, Vertex> e_left, const Graph& right,
                                    std::pair<Vertex, Vertex> e_right, int k) {
  return join_layout(left, e_left, right, e_right, k).graph;
}

/// Prisms C_{sizes[i]} x K2 joined one after another; ladders[i] is the rung
/// count between component i and i+1. Attachment edges are drawn from the
/// previous component with a seeded generator so chains stay path-shaped.
[[nodiscard]] inline Graph gen_chain(std::span<const int> prism_sizes, std::span<const int> ladders,
                                     std::uint64_t seed) {
  if (prism_sizes.empty()) throw InvalidInput("gen_chain: need at least one component");
  if (ladders.size() + 1 != prism_sizes.size()) {
    throw InvalidInput("gen_chain: need exactly one ladder length per adjacent component pair");
  }
  std::mt19937_64 rng(seed);
  Graph running = gen_prism(prism_sizes[0]);
  int last_begin = 0;
  int last_end = running.order();
  for (std::size_t i = 1; i < prism_sizes.size(); ++i) {
    std::vector<Edge> candidates;
    for (const auto& e : running.edges()) {
      if (e.u >= last_begin && e.v < last_end) candidates.push_back(e);
    }
    std::uniform_int_distribution<std::size_t> pick_left(0, candidates.size() - 1);
    const Edge el = candidates[pick_left(rng)];
    const Graph next = gen_prism(prism_sizes[i]);
    std::uniform_int_distribution<int> pick_right(0, next.size() - 1);
    const Edge er = next.edge(pick_right(rng));
    std::bernoulli_distribution flip(0.5);
    const auto right_pair = flip(rng) ? std::pair{er.v, er.u} : std::pair{er.u, er.v};
    const auto layout = join_layout(running, {el.u, el.v}, next, right_pair, ladders[i - 1]);
    last_begin = running.order();
    last_end = last_begin + next.order();
    running = layout.graph;
  }
  return running;
}

/// Join of two prisms on the seeded choice of one edge each.
[[nodiscard]] inline Graph gen_prism_join(int m_left, int m_right, int k, std::uint64_t seed) {
  const std::array<int, 2> sizes{m_left, m_right};
  const std::array<int, 1> ladders{k};
  return gen_chain(sizes, ladders, seed);
}

/// A named corpus member and the recipe that built it.
struct CorpusEntry {
  std::string name;
  std::string generator;  // prism | join | chain
  Graph graph;
};

/// Fixed BCP corpus: prisms m = 4..12, prism-pair joins for k = 0..3 and
/// seven chains of 40-60 vertices (one of them a 54-vertex, depth-2 instance).
[[nodiscard]] inline std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int m : {4, 6, 8, 10, 12}) {
    corpus.push_back({"prism-" + std::to_string(m), "prism", gen_prism(m)});
  }
  const std::vector<std::pair<int, int>> pairs{{4, 4}, {4, 6}, {6, 8}, {8, 10}, {10, 12}, {12, 12}};
  std::uint64_t seed = 1;
  for (const auto& [a, b] : pairs) {
    for (int k = 0; k <= 3; ++k) {
      corpus.push_back({"join-" + std::to_string(a) + "-" + std::to_string(b) + "-k" + std::to_string(k),
                        "join", gen_prism_join(a, b, k, seed++)});
    }
  }
  struct ChainRecipe {
    const char* name;
    std::vector<int> sizes;
    std::vector<int> ladders;
  };
  const std::vector<ChainRecipe> chains{
      {"chain-40a", {4, 4, 4, 4, 4}, {0, 0, 0, 0}},
      {"chain-40b", {6, 6, 6}, {1, 1}},
      {"chain-54", {8, 8, 8}, {2, 1}},
      {"chain-58a", {10, 10, 6}, {3, 0}},
      {"chain-50", {4, 8, 4, 6}, {1, 2, 0}},
      {"chain-58b", {12, 12, 4}, {0, 1}},
      {"chain-56", {6, 4, 6, 4, 6}, {0, 1, 0, 1}},
  };
  for (const auto& c : chains) {
    corpus.push_back({c.name, "chain", gen_chain(c.sizes, c.ladders, seed++)});
  }
  return corpus;
}

}  // namespace bcp
