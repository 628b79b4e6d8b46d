#include "radial/layout_pc.hpp"

#include <limits>
#include <stdexcept>

namespace radial {

void LayoutParams::validate() const {
  if (!(root_radius > 0.0) || !std::isfinite(root_radius))
    throw std::invalid_argument("root radius must be positive");
  if (!(arc_angle > 0.0 && arc_angle < 2.0 * std::numbers::pi))
    throw std::invalid_argument("arc angle must lie in (0, 2pi)");
}

namespace {

// Angular gap between adjacent siblings in a family of `count` spread over
// `span` radians, measured along the shorter arc.
double sibling_gap(std::size_t count, double span) {
  double gap = span / static_cast<double>(count);
  return std::min(gap, 2.0 * std::numbers::pi - gap);
}

}  // namespace

ParentCenteredModel static_layout(std::shared_ptr<const RootedTree> tree,
                                  const LayoutParams& params) {
  params.validate();
  const RootedTree& t = *tree;
  constexpr double pi = std::numbers::pi;
  const double phi = params.arc_angle;

  ParentCenteredModel m;
  m.coords.assign(t.node_count(), PolarCoord{});
  for (NodeId v : t.top_down()) {
    const auto& kids = t.children(v);
    if (kids.empty()) continue;
    const double count = static_cast<double>(kids.size());

    if (t.is_root(v)) {
      for (std::size_t i = 1; i <= kids.size(); ++i) {
        m.coords[kids[i - 1]] = {2.0 * pi * static_cast<double>(i) / count, params.root_radius};
      }
      continue;
    }

    const NodeId parent = *t.parent(v);
    const std::size_t family = t.children(parent).size();
    const double own_radius = m.coords[v].r;
    double radius;
    if (family == 1) {
      radius = own_radius / 2.0;
    } else {
      // The arc midpoint sits half a gap away on the circle of radius own_radius;
      // its chord distance from v is 2 r sin(gap / 4).
      const double span = t.is_root(parent) ? 2.0 * pi : phi;
      radius = 2.0 * own_radius * std::sin(sibling_gap(family, span) / 4.0);
    }
    for (std::size_t i = 1; i <= kids.size(); ++i) {
      double theta = pi - phi / 2.0 + phi * static_cast<double>(2 * i - 1) / (2.0 * count);
      m.coords[kids[i - 1]] = {theta, radius};
    }
  }
  m.tree = std::move(tree);
  return m;
}

double containment_radius(const ParentCenteredModel& m, NodeId v) {
  const auto& kids = m.tree->children(v);
  return kids.empty() ? 0.0 : m.coords[kids.front()].r;
}

}  // namespace radial
