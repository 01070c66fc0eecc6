#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "bcp/book.hpp"
#include "bcp/errors.hpp"
#include "bcp/graph.hpp"

namespace bcp {

struct ArcDiagramStyle {
  double spacing = 40.0;  // between neighboring spine positions
  double margin = 20.0;
  double vertex_radius = 4.0;
  bool labels = true;
};

namespace detail {

constexpr std::array<const char*, 6> kPagePalette{"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace detail

/// Arc diagram of a book embedding. Pages are drawn in pairs around one copy
/// of the spine each: page 2r above row r, page 2r+1 below it.
[[nodiscard]] inline std::string render_svg(const Graph& g, const BookEmbedding& be, const ArcDiagramStyle& style = {}) {
  if (be.spine.size() != g.order() || static_cast<int>(be.page.size()) != g.size()) {
    throw InvalidInput("render: embedding does not match the graph");
  }
  for (int p : be.page) {
    if (p < 0) throw InvalidInput("render: negative page " + std::to_string(p));
  }
  const int n = g.order();
  const int rows = std::max(1, (be.page_count() + 1) / 2);
  const double half = style.spacing * std::max(1, n - 1) / 2.0;  // tallest possible arc
  const double row_height = 2 * half + 2 * style.margin;
  const double width = style.spacing * std::max(0, n - 1) + 2 * style.margin;
  const double height = row_height * rows;
  auto x_of = [&](Vertex v) { return style.margin + style.spacing * be.spine.position(v); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (int r = 0; r < rows; ++r) {
    const double y = row_height * r + style.margin + half;
    out << "<line x1=\"" << style.margin << "\" y1=\"" << y << "\" x2=\"" << width - style.margin << "\" y2=\"" << y
        << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  }
  for (int e = 0; e < g.size(); ++e) {
    const int p = be.page[e];
    const double y = row_height * (p / 2) + style.margin + half;
    double x1 = x_of(g.edge(e).u);
    double x2 = x_of(g.edge(e).v);
    if (x1 > x2) std::swap(x1, x2);
    const double radius = (x2 - x1) / 2;
    // sweep 1 draws clockwise from left to right, i.e. above the line
    const int sweep = p % 2 == 0 ? 1 : 0;
    out << "<path d=\"M " << x1 << ' ' << y << " A " << radius << ' ' << radius << " 0 0 " << sweep << ' ' << x2
        << ' ' << y << "\" fill=\"none\" stroke=\"" << detail::kPagePalette[p % detail::kPagePalette.size()]
        << "\" stroke-width=\"2\" data-page=\"" << p << "\"/>\n";
  }
  for (int r = 0; r < rows; ++r) {
    const double y = row_height * r + style.margin + half;
    for (Vertex v = 0; v < n; ++v) {
      out << "<circle cx=\"" << x_of(v) << "\" cy=\"" << y << "\" r=\"" << style.vertex_radius << "\" fill=\"#000\"/>\n";
      if (style.labels) {
        out << "<text x=\"" << x_of(v) + style.vertex_radius << "\" y=\"" << y + 3 * style.vertex_radius
            << "\" font-size=\"10\" font-family=\"monospace\">" << v << "</text>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bcp
