#ifndef DOMDRAW_SVG_HPP
#define DOMDRAW_SVG_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>

#include "domdraw/drawing.hpp"
#include "domdraw/error.hpp"
#include "domdraw/graph.hpp"

namespace domdraw {

struct SvgStyle {
  int cell = 40;      ///< pixels per coordinate unit
  int radius = 10;
  int font_size = 12;
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// SVG 1.1 picture of a 2-dimensional drawing.
///
/// Vertex v sits at screen (D_1(v), top - D_2(v)) on a grid of `style.cell`
/// pixels, where top = max(n - 1, max D_2), so dominance points up and to
/// the right. Edges of `g` whose endpoints are both drawn become straight
/// segments, emitted before the circles in edge order; circles follow the
/// drawing's entry order. Output is a pure function of its inputs.
inline std::string render_svg(const DominanceDrawing& drawing, const Dag* g = nullptr, SvgStyle style = {}) {
  if (drawing.k() != 2) throw NotTwoDimensional();
  const auto n = static_cast<Coord>(drawing.size());
  Coord max_x = 0;
  Coord top = n > 0 ? n - 1 : 0;
  for (std::size_t e = 0; e < drawing.size(); ++e) {
    max_x = std::max(max_x, drawing.coords(e)[0]);
    top = std::max(top, drawing.coords(e)[1]);
  }
  const Coord margin = style.cell;
  auto sx = [&](Coord x) { return margin + x * style.cell; };
  auto sy = [&](Coord y) { return margin + (top - y) * style.cell; };

  std::ostringstream svg;
  const Coord width = 2 * margin + max_x * style.cell;
  const Coord height = 2 * margin + top * style.cell;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  if (g) {
    svg << "  <g stroke=\"#555555\" stroke-width=\"1.5\">\n";
    for (auto [u, v] : g->edges()) {
      auto eu = drawing.find(g->id(u));
      auto ev = drawing.find(g->id(v));
      if (!eu || !ev) continue;
      const auto cu = drawing.coords(*eu);
      const auto cv = drawing.coords(*ev);
      svg << "    <line x1=\"" << sx(cu[0]) << "\" y1=\"" << sy(cu[1]) << "\" x2=\"" << sx(cv[0]) << "\" y2=\""
          << sy(cv[1]) << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  svg << "  <g font-family=\"sans-serif\" font-size=\"" << style.font_size << "\" text-anchor=\"middle\">\n";
  for (std::size_t e = 0; e < drawing.size(); ++e) {
    const auto c = drawing.coords(e);
    const auto label = detail::xml_escape(drawing.id(e));
    svg << "    <circle cx=\"" << sx(c[0]) << "\" cy=\"" << sy(c[1]) << "\" r=\"" << style.radius
        << "\" fill=\"#dbe9f6\" stroke=\"#1f4e79\"/>\n"
        << "    <text x=\"" << sx(c[0]) << "\" y=\"" << sy(c[1]) + style.font_size / 3 << "\">" << label
        << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace domdraw

#endif  // DOMDRAW_SVG_HPP
