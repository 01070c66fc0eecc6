#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcp/errors.hpp"
#include "bcp/graph.hpp"

namespace bcp {

/// Vertex placement along the spine: a bijection between vertices and
/// positions 0..n-1.
class SpineOrder {
 public:
  SpineOrder() = default;

  /// Throws InvalidInput unless `order` is a permutation of 0..size-1.
  explicit SpineOrder(std::vector<Vertex> order) : order_(std::move(order)), position_(order_.size(), -1) {
    const int n = static_cast<int>(order_.size());
    for (int i = 0; i < n; ++i) {
      const Vertex v = order_[i];
      if (v < 0 || v >= n || position_[v] != -1) {
        throw InvalidInput("spine order is not a permutation of 0.." + std::to_string(n - 1));
      }
      position_[v] = i;
    }
  }

  [[nodiscard]] int size() const { return static_cast<int>(order_.size()); }
  [[nodiscard]] const std::vector<Vertex>& order() const { return order_; }
  [[nodiscard]] Vertex at(int pos) const { return order_[pos]; }
  [[nodiscard]] int position(Vertex v) const { return position_[v]; }

  friend bool operator==(const SpineOrder&, const SpineOrder&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

/// Spine plus a page per edge (indexed like Graph::edges()).
struct BookEmbedding {
  SpineOrder spine;
  std::vector<int> page;

  [[nodiscard]] int page_count() const {
    return page.empty() ? 0 : *std::max_element(page.begin(), page.end()) + 1;
  }
};

[[nodiscard]] inline SpineOrder identity_order(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return SpineOrder(std::move(order));
}

/// Printing cycle v2, ..., vp, v1 applied `steps` times.
[[nodiscard]] inline SpineOrder rotate_order(const SpineOrder& s, int steps) {
  auto order = s.order();
  if (!order.empty()) {
    const int n = static_cast<int>(order.size());
    const int shift = ((steps % n) + n) % n;
    std::rotate(order.begin(), order.begin() + shift, order.end());
  }
  return SpineOrder(std::move(order));
}

[[nodiscard]] inline SpineOrder reverse_order(const SpineOrder& s) {
  auto order = s.order();
  std::reverse(order.begin(), order.end());
  return SpineOrder(std::move(order));
}

}  // namespace bcp
