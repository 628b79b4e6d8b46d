#include "radial/animation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace radial {

void AnimationParams::validate() const {
  if (steps < 1) throw std::invalid_argument("animation needs at least one intermediate step");
  if (!(0.0 <= fade_out_begin && fade_out_begin <= fade_out_end && fade_out_end <= 1.0))
    throw std::invalid_argument("fade-out window must lie within [0, 1]");
  layout.validate();
}

std::string_view to_string(EdgeRole role) {
  switch (role) {
    case EdgeRole::kShared:
      return "shared";
    case EdgeRole::kOldOnly:
      return "old-only";
    case EdgeRole::kNewOnly:
      return "new-only";
  }
  return "shared";
}

EdgeRole edge_role_from_string(std::string_view name) {
  if (name == "shared") return EdgeRole::kShared;
  if (name == "old-only") return EdgeRole::kOldOnly;
  if (name == "new-only") return EdgeRole::kNewOnly;
  throw std::invalid_argument("unknown edge role '" + std::string(name) + "'");
}

std::vector<double> ease_schedule(std::size_t intermediate) {
  if (intermediate < 1) throw std::invalid_argument("ease schedule needs p >= 1");
  const std::size_t last = intermediate + 1;
  std::vector<double> times(last + 1);
  for (std::size_t k = 0; 2 * k <= last; ++k) {
    double t = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(k) /
                                      static_cast<double>(last)));
    if (2 * k == last) t = 0.5;
    times[k] = t;
    times[last - k] = 1.0 - t;
  }
  times.front() = 0.0;
  times.back() = 1.0;
  return times;
}

namespace {

void require_same_tree(const ParentCenteredModel& a, const ParentCenteredModel& b) {
  if (!a.tree || !b.tree) throw std::invalid_argument("model without a tree");
  if (a.tree != b.tree && !(*a.tree == *b.tree))
    throw std::invalid_argument("models refer to different trees");
  if (a.coords.size() != a.tree->node_count() || b.coords.size() != b.tree->node_count())
    throw std::invalid_argument("model does not cover its tree");
}

}  // namespace

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Representative of `a` in [0, 2pi).
double wrap_positive(double a) {
  double w = a - kTwoPi * std::floor(a / kTwoPi);
  return w >= kTwoPi ? 0.0 : w;
}

// Smallest a + 2pi k that is >= floor_value.
double lift_above(double a, double floor_value) {
  return a + kTwoPi * std::ceil((floor_value - a) / kTwoPi);
}

// Angles of one family before and after, unwrapped so that linear
// interpolation never changes the family's cyclic order.
void unwrap_family(const ParentCenteredModel& m_old, const ParentCenteredModel& m_new,
                   const std::vector<NodeId>& kids, bool around_root, std::vector<double>& from,
                   std::vector<double>& to) {
  const std::size_t k = kids.size();
  from.resize(k);
  to.resize(k);
  if (!around_root) {
    // Angle 0 points at the grandparent: stay inside (0, 2pi) so no child edge
    // sweeps over the edge to the parent.
    for (std::size_t i = 0; i < k; ++i) {
      from[i] = wrap_positive(m_old.coords[kids[i]].theta);
      const double target = m_new.coords[kids[i]].theta;
      to[i] = (target >= 0.0 && target < kTwoPi) ? target : wrap_positive(target);
    }
    return;
  }
  // Around the root the frame is fixed to +x and the family may rotate as a
  // whole: lift both sequences to be non-decreasing in child order, then shift
  // the old one by whole turns to minimise the total rotation.
  from[0] = m_old.coords[kids[0]].theta;
  to[0] = m_new.coords[kids[0]].theta;
  double shift = 0.0;
  for (std::size_t i = 1; i < k; ++i) {
    from[i] = lift_above(m_old.coords[kids[i]].theta, from[i - 1]);
    to[i] = lift_above(m_new.coords[kids[i]].theta, to[i - 1]);
  }
  for (std::size_t i = 0; i < k; ++i) shift += from[i] - to[i];
  const double turns = std::round(shift / (kTwoPi * static_cast<double>(k)));
  for (double& a : from) a -= kTwoPi * turns;
}

}  // namespace

ParentCenteredModel model_at(const ParentCenteredModel& m_old, const ParentCenteredModel& m_new,
                             double t, RadiusBlend blend) {
  require_same_tree(m_old, m_new);
  const RootedTree& tree = *m_new.tree;
  ParentCenteredModel out;
  out.tree = m_new.tree;
  out.coords.resize(tree.node_count());

  const NodeId root = tree.root();
  out.coords[root] = {m_old.coords[root].theta, (1.0 - t) * m_old.coords[root].r};

  std::vector<double> from;
  std::vector<double> to;
  for (NodeId v : tree.top_down()) {
    const auto& kids = tree.children(v);
    if (kids.empty()) continue;
    unwrap_family(m_old, m_new, kids, tree.is_root(v), from, to);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const PolarCoord& a = m_old.coords[kids[i]];
      const PolarCoord& b = m_new.coords[kids[i]];
      double r = t * b.r + (1.0 - t) * a.r;
      if (blend == RadiusBlend::kGeometric && a.r > 0.0 && b.r > 0.0) {
        r = t >= 1.0 ? b.r : std::pow(a.r, 1.0 - t) * std::pow(b.r, t);
      }
      out.coords[kids[i]] = {t * to[i] + (1.0 - t) * from[i], r};
    }
  }
  return out;
}

Drawing frame_at(const ParentCenteredModel& m_old, const ParentCenteredModel& m_new, double t,
                 RadiusBlend blend) {
  return to_drawing(model_at(m_old, m_new, t, blend));
}

namespace {

constexpr double kZeroRayTolerance = 1e-9;

}  // namespace

RootedTree order_children_by_drawing(const RootedTree& t, const Drawing& d) {
  if (d.size() < t.node_count()) throw std::invalid_argument("drawing does not cover the tree");
  std::vector<std::vector<NodeId>> children(t.node_count());
  std::vector<std::pair<double, NodeId>> keyed;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    const auto& kids = t.children(v);
    double zero = 0.0;
    if (auto p = t.parent(v)) {
      const Point up = d[*p] - d[v];
      if (up.x != 0.0 || up.y != 0.0) zero = std::atan2(up.y, up.x);
    }
    keyed.clear();
    for (NodeId c : kids) {
      const Point out = d[c] - d[v];
      const double angle = (out.x == 0.0 && out.y == 0.0) ? 0.0 : std::atan2(out.y, out.x);
      // Root keys live in (0, 2pi]: a child straight along +x sorts last, as
      // the static layout places it. Elsewhere keys stay in [0, 2pi) to match
      // the per-family interpolation range.
      double key = wrap_positive(angle - zero);
      if (t.is_root(v) &&
          (key < kZeroRayTolerance || key > 2.0 * std::numbers::pi - kZeroRayTolerance))
        key = 2.0 * std::numbers::pi;
      keyed.emplace_back(key, c);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [angle, c] : keyed) children[v].push_back(c);
  }
  return RootedTree::from_children(t.root(), std::move(children));
}

std::vector<double> edge_opacity(EdgeRole role, const std::vector<double>& times,
                                 const AnimationParams& params) {
  std::vector<double> out(times.size(), 1.0);
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    if (role == EdgeRole::kOldOnly) {
      if (t >= params.fade_out_end) {
        out[k] = 0.0;
      } else if (t > params.fade_out_begin) {
        out[k] = 1.0 - (t - params.fade_out_begin) / (params.fade_out_end - params.fade_out_begin);
      }
    } else if (role == EdgeRole::kNewOnly && params.fade_in_at_end) {
      out[k] = t >= 1.0 ? 1.0 : 0.0;
    }
  }
  return out;
}

std::vector<EdgeVisual> build_edge_visuals(const EdgeSet& old_edges, const EdgeSet& new_edges,
                                           const std::vector<double>& times,
                                           const AnimationParams& params) {
  std::vector<EdgeVisual> out;
  for (const Edge& e : old_edges.united(new_edges)) {
    const bool in_old = old_edges.contains(e);
    const bool in_new = new_edges.contains(e);
    const EdgeRole role = in_old && in_new ? EdgeRole::kShared
                          : in_old         ? EdgeRole::kOldOnly
                                           : EdgeRole::kNewOnly;
    out.push_back({e, role, edge_opacity(role, times, params)});
  }
  return out;
}

Timeline animate_to_tree(const Drawing& d_old, const RootedTree& new_tree,
                         const EdgeSet& old_edges, const AnimationParams& params) {
  params.validate();
  if (d_old.size() != new_tree.node_count())
    throw std::invalid_argument("old drawing has " + std::to_string(d_old.size()) +
                                " positions for " + std::to_string(new_tree.node_count()) +
                                " nodes");
  auto tree = std::make_shared<const RootedTree>(new_tree);
  auto m_new = std::make_shared<const ParentCenteredModel>(static_layout(tree, params.layout));
  auto m_old = std::make_shared<const ParentCenteredModel>(from_drawing(d_old, tree).model);

  Timeline tl;
  tl.tree = tree;
  tl.root = new_tree.root();
  tl.old_edges = old_edges;
  tl.new_edges = tree->edges();
  // The endpoints are returned as given so rounding in the polar round trip
  // never moves the starting drawing.
  auto start = std::make_shared<const Drawing>(d_old);
  tl.evaluate = [m_old, m_new, start, blend = params.radius_blend](double t) {
    if (t <= 0.0) return *start;
    return frame_at(*m_old, *m_new, t, blend);
  };

  const std::vector<double> times = ease_schedule(params.steps);
  tl.frames.reserve(times.size());
  for (double t : times) tl.frames.push_back({t, tl.evaluate(t)});

  tl.edge_visuals = build_edge_visuals(tl.old_edges, tl.new_edges, times, params);
  return tl;
}

Timeline animate(const Graph& g, const Drawing& d_old, NodeId new_root,
                 const AnimationParams& params, const std::optional<EdgeSet>& old_edges) {
  if (d_old.size() != g.node_count())
    throw std::invalid_argument("old drawing does not cover the graph");
  RootedTree tree = bfs_spanning_tree(g, new_root);
  if (params.child_order == ChildOrder::kFollowDrawing) tree = order_children_by_drawing(tree, d_old);
  return animate_to_tree(d_old, tree, old_edges.value_or(g.edges()), params);
}

Drawing force_directed_layout(const Graph& g, std::size_t iterations, std::uint64_t seed,
                              const SpringParams& params) {
  const std::size_t n = g.node_count();
  const double rest = params.rest_length;
  const double half_side = rest * std::sqrt(static_cast<double>(n));

  std::mt19937_64 rng(seed);
  Drawing d;
  d.positions.resize(n);
  for (auto& p : d.positions) {
    p.x = (2.0 * unit_uniform(rng) - 1.0) * half_side;
    p.y = (2.0 * unit_uniform(rng) - 1.0) * half_side;
  }

  std::vector<Point> force(n);
  for (std::size_t it = 0; it < iterations; ++it) {
    std::fill(force.begin(), force.end(), Point{});
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        Point delta = d[v] - d[u];
        double dist = std::hypot(delta.x, delta.y);
        Point dir;
        if (dist < 1e-9) {
          // Coincident nodes: separate along an id-dependent direction.
          double a = static_cast<double>(u * 31 + v * 17);
          dir = {std::cos(a), std::sin(a)};
          dist = 1e-9;
        } else {
          dir = (1.0 / dist) * delta;
        }
        double magnitude;  // positive pulls u and v together
        if (g.adjacent(u, v)) {
          magnitude = params.attraction * rest * std::log(dist / rest);
        } else {
          magnitude = -params.repulsion * rest * rest * rest / (dist * dist);
        }
        force[u] = force[u] + magnitude * dir;
        force[v] = force[v] - magnitude * dir;
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      Point step = params.step * force[v];
      double len = std::hypot(step.x, step.y);
      if (len > rest) step = (rest / len) * step;
      d[v] = d[v] + step;
    }
  }
  return d;
}

}  // namespace radial
