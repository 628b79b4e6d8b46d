#include "radial/coords.hpp"

#include <algorithm>
#include <stdexcept>

namespace radial {

double max_position_error(const Drawing& a, const Drawing& b) {
  if (a.size() != b.size()) throw std::invalid_argument("drawings differ in size");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, distance(a.positions[i], b.positions[i]));
  }
  return worst;
}

double angle_difference(double a, double b) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = std::remainder(a - b, two_pi);  // [-pi, pi]
  if (d <= -std::numbers::pi) d += two_pi;
  return d;
}

namespace {

// Zero direction of the frame in which `v` is expressed, given positions of
// all of v's ancestors. `zero` holds the already computed values for them.
double frame_zero(const RootedTree& t, const Drawing& d, const std::vector<double>& zero,
                  NodeId v, bool& degenerate) {
  degenerate = false;
  auto p = t.parent(v);
  if (!p) return 0.0;
  auto g = t.parent(*p);
  if (!g) return 0.0;
  Point towards = d[*g] - d[*p];
  if (std::hypot(towards.x, towards.y) <= kDegenerateFrameEpsilon) {
    degenerate = true;
    return zero[*p];
  }
  return std::atan2(towards.y, towards.x);
}

}  // namespace

Drawing to_drawing(const ParentCenteredModel& m) {
  const RootedTree& t = *m.tree;
  Drawing d;
  d.positions.resize(t.node_count());
  std::vector<double> zero(t.node_count(), 0.0);
  for (NodeId v : t.top_down()) {
    bool degenerate = false;
    zero[v] = frame_zero(t, d, zero, v, degenerate);
    auto p = t.parent(v);
    Point origin = p ? d[*p] : Point{};
    const PolarCoord& c = m.coords[v];
    double angle = zero[v] + c.theta;
    d[v] = origin + c.r * Point{std::cos(angle), std::sin(angle)};
  }
  return d;
}

ModelConversion from_drawing(const Drawing& d, std::shared_ptr<const RootedTree> tree) {
  const RootedTree& t = *tree;
  if (d.size() < t.node_count()) throw std::invalid_argument("drawing does not cover the tree");
  ModelConversion out;
  out.model.coords.resize(t.node_count());
  std::vector<double> zero(t.node_count(), 0.0);
  for (NodeId v : t.top_down()) {
    bool degenerate = false;
    zero[v] = frame_zero(t, d, zero, v, degenerate);
    if (degenerate) out.degenerate_frames.push_back(v);
    auto p = t.parent(v);
    Point offset = d[v] - (p ? d[*p] : Point{});
    double r = std::hypot(offset.x, offset.y);
    double theta = r > 0.0 ? std::atan2(offset.y, offset.x) - zero[v] : 0.0;
    out.model.coords[v] = {theta, r};
  }
  std::sort(out.degenerate_frames.begin(), out.degenerate_frames.end());
  out.model.tree = std::move(tree);
  return out;
}

}  // namespace radial
