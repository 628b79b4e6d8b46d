#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "radial/coords.hpp"
#include "radial/layout_pc.hpp"

namespace radial {

/// How parent-centred radii are blended between the two models.
enum class RadiusBlend {
  /// r = t r_new + (1 - t) r_old.
  kLinear,
  /// r = r_old^(1 - t) r_new^t; falls back to linear when either radius is 0.
  kGeometric,
};

/// Sibling order used for the target layout.
enum class ChildOrder {
  /// Child lists exactly as the spanning tree stores them.
  kTree,
  /// Children sorted counter-clockwise by their direction in the old drawing.
  kFollowDrawing,
};

struct AnimationParams {
  /// Intermediate frames between t = 0 and t = 1.
  std::size_t steps = 30;
  LayoutParams layout;
  /// Interval of t over which edges absent from the new tree fade out.
  double fade_out_begin = 0.0;
  double fade_out_end = 0.3;
  /// New-only edges appear at t = 1; otherwise they are shown throughout.
  bool fade_in_at_end = true;
  RadiusBlend radius_blend = RadiusBlend::kLinear;
  ChildOrder child_order = ChildOrder::kFollowDrawing;

  void validate() const;
};

enum class EdgeRole { kShared, kOldOnly, kNewOnly };

std::string_view to_string(EdgeRole role);
EdgeRole edge_role_from_string(std::string_view name);

struct EdgeVisual {
  Edge edge;
  EdgeRole role = EdgeRole::kShared;
  /// One value per frame.
  std::vector<double> opacity;
};

struct Frame {
  double t = 0.0;
  Drawing drawing;
};

/// Animated transition. `evaluate` regenerates the drawing at any t in [0, 1]
/// from the same interpolation that produced `frames`.
struct Timeline {
  std::vector<Frame> frames;
  /// Tree the target drawing is based on, when there is one.
  std::shared_ptr<const RootedTree> tree;
  std::vector<EdgeVisual> edge_visuals;
  EdgeSet old_edges;
  EdgeSet new_edges;
  std::optional<NodeId> root;
  std::function<Drawing(double)> evaluate;

  const Drawing& first() const { return frames.front().drawing; }
  const Drawing& last() const { return frames.back().drawing; }
};

/// Slow-in/slow-out times t_k = (1 - cos(pi k / (p + 1))) / 2, k = 0..p+1.
/// Endpoints are exactly 0 and 1 and the sequence is exactly symmetric about 1/2.
std::vector<double> ease_schedule(std::size_t intermediate);

/// Drawing at time t between two models of the same tree. The root's radius
/// shrinks linearly to zero along its old angle; every other node moves
/// linearly in (theta, r). Angles are unwrapped per family: children of a
/// non-root node interpolate within [0, 2pi) of their parent's frame, and the
/// root's children keep their cyclic order and rotate by the least whole-turn
/// offset. Throws std::invalid_argument if the models do not share one tree.
Drawing frame_at(const ParentCenteredModel& m_old, const ParentCenteredModel& m_new, double t,
                 RadiusBlend blend = RadiusBlend::kLinear);

/// Same parent map with every child list sorted counter-clockwise by the
/// child's direction in `d`, measured from the node's zero ray (toward its
/// parent, or +x at the root). Root children on the +x ray sort last, as the
/// static layout places them. Ties keep the original order.
RootedTree order_children_by_drawing(const RootedTree& t, const Drawing& d);

/// Interpolated model behind frame_at.
ParentCenteredModel model_at(const ParentCenteredModel& m_old, const ParentCenteredModel& m_new,
                             double t, RadiusBlend blend = RadiusBlend::kLinear);

/// Per-frame opacities for one role under `params`.
std::vector<double> edge_opacity(EdgeRole role, const std::vector<double>& times,
                                 const AnimationParams& params);

/// Roles and per-frame opacities for every edge of old_edges | new_edges.
std::vector<EdgeVisual> build_edge_visuals(const EdgeSet& old_edges, const EdgeSet& new_edges,
                                           const std::vector<double>& times,
                                           const AnimationParams& params);

/// Transition from `d_old` to the parent-centred layout of `new_tree`.
/// `old_edges` are the edges visible in d_old and drive the edge roles. The
/// tree is used as given; params.child_order is not applied here.
Timeline animate_to_tree(const Drawing& d_old, const RootedTree& new_tree,
                         const EdgeSet& old_edges, const AnimationParams& params = {});

/// Re-root on `new_root`: breadth-first spanning tree of g, its static layout,
/// and the transition to it. With ChildOrder::kFollowDrawing the tree's child
/// lists are first sorted by order_children_by_drawing(tree, d_old). Without `old_edges` every graph edge is taken as
/// visible in d_old.
Timeline animate(const Graph& g, const Drawing& d_old, NodeId new_root,
                 const AnimationParams& params = {},
                 const std::optional<EdgeSet>& old_edges = std::nullopt);

struct SpringParams {
  /// Rest length of an edge spring.
  double rest_length = 100.0;
  double attraction = 2.0;
  double repulsion = 1.0;
  double step = 0.1;
};

inline constexpr std::size_t kDefaultSpringIterations = 1000;

/// Eades spring embedder: logarithmic springs on edges, inverse-square
/// repulsion between non-adjacent pairs, fixed step. Starts from a seeded
/// uniform placement in a square of side 2 * rest_length * sqrt(n).
Drawing force_directed_layout(const Graph& g, std::size_t iterations, std::uint64_t seed,
                              const SpringParams& params = {});

}  // namespace radial
