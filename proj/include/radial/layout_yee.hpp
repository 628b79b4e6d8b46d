#pragma once

#include <optional>
#include <vector>

#include "radial/animation.hpp"
#include "radial/coords.hpp"

namespace radial {

/// Root-centred baseline: every generation on its own concentric ring.
struct YeeParams {
  double ring_spacing = 100.0;
  /// Total frames of a transition, endpoints included.
  std::size_t steps = 32;

  void validate() const;
};

/// Angular wedge [begin, begin + width) assigned to a node.
struct Sector {
  double begin = 0.0;
  double width = 0.0;

  double center() const { return begin + width / 2.0; }
};

/// Leaf-count-weighted sectors: the root owns [0, 2pi) and each child gets a
/// share of its parent's sector proportional to its subtree's leaf count, in
/// child order.
std::vector<Sector> yee_sectors(const RootedTree& t);

/// Node at depth d sits at radius d * ring_spacing in the middle of its sector.
Drawing yee_static_layout(const RootedTree& t, const YeeParams& p = {});

/// Frame times for a baseline transition: ease_schedule with steps - 2
/// intermediates, or {0, 1} when steps == 2.
std::vector<double> yee_schedule(const YeeParams& p);

/// Transition from `d_old` to yee_static_layout(t_new). When `former_parent`
/// is given, the target is rotated about the origin so that the edge from the
/// new root to that node keeps its direction from d_old. Every node moves
/// linearly in polar coordinates about the origin, taking the shorter angular
/// route. `old_edges` drive the edge roles; when absent only tree edges are
/// assumed and all are shared.
Timeline yee_animate(const Drawing& d_old, const RootedTree& t_new, const YeeParams& p = {},
                     std::optional<NodeId> former_parent = std::nullopt,
                     const std::optional<EdgeSet>& old_edges = std::nullopt);

}  // namespace radial
