#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radial/coords.hpp"
#include "radial/graph.hpp"

namespace radial {

struct SvgStyle {
  double node_radius = 4.0;
  double stroke_width = 1.0;
  /// Draw each internal node's containment circle (the circle its children lie on).
  bool containment = false;
  /// Write a text label next to every node.
  bool labels = false;
  /// Label text per node; node ids are used where absent.
  std::vector<std::optional<std::string>> label_text;
};

/// Still image of a tree drawing: one <line> per tree edge, one <circle> per
/// node, optional containment circles and labels. The viewBox is the bounding
/// box of the positions grown by 5% of its larger side on every edge.
/// Throws std::invalid_argument when the drawing and tree disagree on the node
/// count.
std::string render_svg(const Drawing& d, const RootedTree& t, const SvgStyle& style = {});

}  // namespace radial
