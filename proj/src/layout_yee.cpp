#include "radial/layout_yee.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace radial {

void YeeParams::validate() const {
  if (!(ring_spacing > 0.0) || !std::isfinite(ring_spacing))
    throw std::invalid_argument("ring spacing must be positive");
  if (steps < 2) throw std::invalid_argument("a transition needs at least two frames");
}

std::vector<Sector> yee_sectors(const RootedTree& t) {
  const auto& order = t.top_down();
  std::vector<std::size_t> leaves(t.node_count(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& kids = t.children(*it);
    if (kids.empty()) {
      leaves[*it] = 1;
    } else {
      for (NodeId c : kids) leaves[*it] += leaves[c];
    }
  }

  std::vector<Sector> sectors(t.node_count());
  sectors[t.root()] = {0.0, 2.0 * std::numbers::pi};
  for (NodeId v : order) {
    double begin = sectors[v].begin;
    const double per_leaf = sectors[v].width / static_cast<double>(leaves[v]);
    for (NodeId c : t.children(v)) {
      const double width = per_leaf * static_cast<double>(leaves[c]);
      sectors[c] = {begin, width};
      begin += width;
    }
  }
  return sectors;
}

Drawing yee_static_layout(const RootedTree& t, const YeeParams& p) {
  p.validate();
  const auto sectors = yee_sectors(t);
  Drawing d;
  d.positions.resize(t.node_count());
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (t.is_root(v)) continue;
    const double radius = static_cast<double>(t.depth(v)) * p.ring_spacing;
    const double angle = sectors[v].center();
    d[v] = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  return d;
}

std::vector<double> yee_schedule(const YeeParams& p) {
  p.validate();
  if (p.steps == 2) return {0.0, 1.0};
  return ease_schedule(p.steps - 2);
}

namespace {

Drawing rotated(const Drawing& d, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Drawing out = d;
  for (auto& q : out.positions) q = {c * q.x - s * q.y, s * q.x + c * q.y};
  return out;
}

struct PolarPath {
  double angle = 0.0;
  double sweep = 0.0;
  double r_from = 0.0;
  double r_to = 0.0;
};

}  // namespace

Timeline yee_animate(const Drawing& d_old, const RootedTree& t_new, const YeeParams& p,
                     std::optional<NodeId> former_parent, const std::optional<EdgeSet>& old_edges) {
  p.validate();
  if (d_old.size() != t_new.node_count())
    throw std::invalid_argument("old drawing does not cover the tree");

  Drawing target = yee_static_layout(t_new, p);
  const NodeId root = t_new.root();
  if (former_parent && *former_parent != root) {
    if (!t_new.has_node(*former_parent)) throw std::invalid_argument("invalid former parent");
    const Point before = d_old[*former_parent] - d_old[root];
    const Point after = target[*former_parent] - target[root];
    if (std::hypot(before.x, before.y) > 0.0 && std::hypot(after.x, after.y) > 0.0) {
      target = rotated(target, std::atan2(before.y, before.x) - std::atan2(after.y, after.x));
    }
  }

  auto paths = std::make_shared<std::vector<PolarPath>>(t_new.node_count());
  for (NodeId v = 0; v < t_new.node_count(); ++v) {
    const Point a = d_old[v];
    const Point b = target[v];
    PolarPath& path = (*paths)[v];
    path.r_from = std::hypot(a.x, a.y);
    path.r_to = std::hypot(b.x, b.y);
    double from = std::atan2(a.y, a.x);
    double to = std::atan2(b.y, b.x);
    if (path.r_from == 0.0) from = to;
    if (path.r_to == 0.0) to = from;
    path.angle = from;
    path.sweep = angle_difference(to, from);
  }

  Timeline tl;
  tl.root = root;
  tl.new_edges = t_new.edges();
  tl.old_edges = old_edges.value_or(tl.new_edges);
  auto start = std::make_shared<const Drawing>(d_old);
  auto finish = std::make_shared<const Drawing>(target);
  tl.evaluate = [paths, start, finish](double t) {
    if (t <= 0.0) return *start;
    if (t >= 1.0) return *finish;
    Drawing d;
    d.positions.reserve(paths->size());
    for (const PolarPath& path : *paths) {
      const double angle = path.angle + t * path.sweep;
      const double r = (1.0 - t) * path.r_from + t * path.r_to;
      d.positions.push_back({r * std::cos(angle), r * std::sin(angle)});
    }
    return d;
  };

  const auto times = yee_schedule(p);
  for (double t : times) tl.frames.push_back({t, tl.evaluate(t)});
  tl.edge_visuals = build_edge_visuals(tl.old_edges, tl.new_edges, times, AnimationParams{});
  return tl;
}

}  // namespace radial
