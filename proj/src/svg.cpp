#include "radial/svg.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include <fmt/format.h>

#include "radial/layout_pc.hpp"

namespace radial {

namespace {

std::string num(double v) {
  std::string s = fmt::format("{:.3f}", v);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Drawing& d, const RootedTree& t, const SvgStyle& style) {
  if (d.size() != t.node_count())
    throw std::invalid_argument(fmt::format("drawing has {} nodes but the tree has {}", d.size(),
                                            t.node_count()));
  if (!style.label_text.empty() && style.label_text.size() != d.size())
    throw std::invalid_argument("label count does not match node count");

  double min_x = d[0].x, max_x = d[0].x, min_y = d[0].y, max_y = d[0].y;
  for (const Point& p : d.positions) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  // A single point has no extent; fall back to enough room for its glyph.
  const double margin = extent > 0.0 ? 0.05 * extent : 2.0 * style.node_radius;

  // SVG's y axis points down; flip so counter-clockwise angles read naturally.
  auto x = [](const Point& p) { return num(p.x); };
  auto y = [](const Point& p) { return num(-p.y); };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
      num(min_x - margin), num(-max_y - margin), num(max_x - min_x + 2 * margin),
      num(max_y - min_y + 2 * margin));

  if (style.containment) {
    const auto model = from_drawing(d, std::make_shared<const RootedTree>(t)).model;
    out += "<g class=\"containment\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 2\">\n";
    for (NodeId v : t.top_down()) {
      const double r = containment_radius(model, v);
      if (r > 0.0)
        out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", x(d[v]), y(d[v]), num(r));
    }
    out += "</g>\n";
  }

  out += fmt::format("<g class=\"edges\" stroke=\"#333\" stroke-width=\"{}\">\n",
                     num(style.stroke_width));
  for (const Edge& e : t.edges()) {
    out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", x(d[e.a]), y(d[e.a]),
                       x(d[e.b]), y(d[e.b]));
  }
  out += "</g>\n";

  out += "<g class=\"nodes\" fill=\"#fff\" stroke=\"#333\">\n";
  for (NodeId v = 0; v < d.size(); ++v) {
    out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", x(d[v]), y(d[v]),
                       num(style.node_radius));
  }
  out += "</g>\n";

  if (style.labels) {
    out += "<g class=\"labels\" font-size=\"10\" font-family=\"sans-serif\">\n";
    for (NodeId v = 0; v < d.size(); ++v) {
      const bool named = !style.label_text.empty() && style.label_text[v].has_value();
      const std::string text = named ? *style.label_text[v] : std::to_string(v);
      out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(d[v].x + style.node_radius),
                         num(-d[v].y - style.node_radius), escape(text));
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace radial
