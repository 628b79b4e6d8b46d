#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "radial/graph.hpp"

namespace radial {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  bool operator==(const Point&) const = default;
};

inline double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

/// Absolute positions indexed by node id.
struct Drawing {
  std::vector<Point> positions;

  std::size_t size() const { return positions.size(); }
  Point operator[](NodeId v) const { return positions[v]; }
  Point& operator[](NodeId v) { return positions[v]; }
  bool operator==(const Drawing&) const = default;
};

/// Largest per-node Euclidean distance between two drawings of equal size.
double max_position_error(const Drawing& a, const Drawing& b);

/// (angle, radius) in a node's frame. Angles are radians, counter-clockwise,
/// not normalised.
struct PolarCoord {
  double theta = 0.0;
  double r = 0.0;
  bool operator==(const PolarCoord&) const = default;
};

/// Difference a - b reduced to (-pi, pi].
double angle_difference(double a, double b);

/// Parent-centred polar coordinates of every node of a tree.
///
/// The root is expressed about the drawing origin with zero along +x. Children
/// of the root use a frame at the root, zero along +x. Every other node uses a
/// frame at its parent whose zero ray points from the parent toward the
/// grandparent. When the parent and grandparent coincide the frame inherits the
/// zero direction of the parent's own frame.
struct ParentCenteredModel {
  std::shared_ptr<const RootedTree> tree;
  std::vector<PolarCoord> coords;

  const PolarCoord& operator[](NodeId v) const { return coords[v]; }
};

/// Within this distance a parent and grandparent are treated as coincident.
inline constexpr double kDegenerateFrameEpsilon = 1e-12;

struct ModelConversion {
  ParentCenteredModel model;
  /// Nodes whose frame fell back to an inherited zero direction.
  std::vector<NodeId> degenerate_frames;
};

/// Single root-to-leaves traversal.
Drawing to_drawing(const ParentCenteredModel& m);

/// Inverse of to_drawing. Throws std::invalid_argument if the drawing does not
/// cover the tree.
ModelConversion from_drawing(const Drawing& d, std::shared_ptr<const RootedTree> tree);

}  // namespace radial
