#pragma once

#include <numbers>

#include "radial/coords.hpp"

namespace radial {

struct LayoutParams {
  /// Distance from the root to each of its children.
  double root_radius = 100.0;
  /// Width of the containment arc used for children of non-root nodes.
  double arc_angle = std::numbers::pi;

  /// Throws std::invalid_argument unless root_radius > 0 and 0 < arc_angle < 2pi.
  void validate() const;
};

/// Parent-centred radial layout of a tree.
///
/// The root sits at the origin and its m children are spread over the full
/// circle at angles 2*pi*i/m, i = 1..m. The m children of any other node v are
/// spread symmetrically over an arc of width `arc_angle` facing away from v's
/// parent, at angles pi - phi/2 + phi*(2i-1)/(2m). They all lie on one
/// containment circle whose radius is half of v's own radius when v has no
/// siblings, and otherwise the distance from v to the arc midpoint between v
/// and its nearest sibling.
ParentCenteredModel static_layout(std::shared_ptr<const RootedTree> tree,
                                  const LayoutParams& params = {});

/// Containment-circle radius assigned to the children of `v` (0 for leaves).
double containment_radius(const ParentCenteredModel& m, NodeId v);

}  // namespace radial
