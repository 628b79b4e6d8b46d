#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "radial/coords.hpp"
#include "support/random_trees.hpp"

using namespace radial;

namespace {

constexpr double kPi = std::numbers::pi;

std::shared_ptr<const RootedTree> chain3() {
  // 0 -> 1 -> 2
  return std::make_shared<const RootedTree>(RootedTree::from_children(0, {{1}, {2}, {}}));
}

ParentCenteredModel model(std::shared_ptr<const RootedTree> t, std::vector<PolarCoord> c) {
  return {std::move(t), std::move(c)};
}

double wrapped_gap(double a, double b) {
  const double d = std::remainder(a - b, 2.0 * kPi);
  return std::abs(d);
}

}  // namespace

TEST(ToDrawing, ZeroRadiusRootAtOrigin) {
  auto t = std::make_shared<const RootedTree>(RootedTree::from_children(0, {{}}));
  const Drawing d = to_drawing(model(t, {{1.234, 0.0}}));
  EXPECT_EQ(d[0], (Point{0.0, 0.0}));
}

TEST(ToDrawing, RootChildFrameAlongPositiveX) {
  auto t = std::make_shared<const RootedTree>(RootedTree::from_children(0, {{1}, {}}));
  const Drawing d = to_drawing(model(t, {{0.0, 0.0}, {0.0, 1.0}}));
  EXPECT_DOUBLE_EQ(d[1].x, 1.0);
  EXPECT_DOUBLE_EQ(d[1].y, 0.0);
}

TEST(ToDrawing, GrandchildFrameComposition) {
  // Zero at A points back at the root (-1, 0); pi turns it to +x.
  const Drawing d = to_drawing(model(chain3(), {{0.0, 0.0}, {0.0, 1.0}, {kPi, 0.5}}));
  EXPECT_NEAR(d[2].x, 1.5, 1e-12);
  EXPECT_NEAR(d[2].y, 0.0, 1e-12);
}

TEST(ToDrawing, RootOffsetMovesWholeDrawing) {
  const Drawing d = to_drawing(model(chain3(), {{kPi / 2, 2.0}, {0.0, 1.0}, {kPi, 1.0}}));
  EXPECT_NEAR(d[0].x, 0.0, 1e-12);
  EXPECT_NEAR(d[0].y, 2.0, 1e-12);
  EXPECT_NEAR(d[1].x, 1.0, 1e-12);
  EXPECT_NEAR(d[1].y, 2.0, 1e-12);
  EXPECT_NEAR(d[2].x, 2.0, 1e-12);
}

TEST(FromDrawing, RootChildAngle) {
  auto t = std::make_shared<const RootedTree>(RootedTree::from_children(0, {{1}, {}}));
  const ModelConversion c = from_drawing(Drawing{{{0, 0}, {0, 1}}}, t);
  EXPECT_NEAR(c.model[1].theta, kPi / 2, 1e-12);
  EXPECT_NEAR(c.model[1].r, 1.0, 1e-12);
  EXPECT_TRUE(c.degenerate_frames.empty());
}

TEST(FromDrawing, RejectsShortDrawing) {
  EXPECT_THROW(from_drawing(Drawing{{{0, 0}}}, chain3()), std::invalid_argument);
}

TEST(FromDrawing, DegenerateFrameFallsBackAndIsFlagged) {
  // Node 1 sits on the root, so node 2's zero ray is undefined.
  const Drawing d{{{0, 0}, {0, 0}, {0, 3}}};
  const ModelConversion c = from_drawing(d, chain3());
  EXPECT_EQ(c.degenerate_frames, (std::vector<NodeId>{2}));
  // Inherited zero is +x (node 1's own frame), so (0, 3) reads as pi/2.
  EXPECT_NEAR(c.model[2].theta, kPi / 2, 1e-12);
  EXPECT_LT(max_position_error(to_drawing(c.model), d), 1e-12);
}

TEST(RoundTrip, ModelThroughDrawing) {
  auto t = chain3();
  const ParentCenteredModel m = model(t, {{0.3, 2.0}, {2.0, 1.5}, {-1.0, 0.7}});
  const ParentCenteredModel back = from_drawing(to_drawing(m), t).model;
  for (NodeId v = 0; v < 3; ++v) {
    EXPECT_NEAR(back[v].r, m[v].r, 1e-9);
    EXPECT_LT(wrapped_gap(back[v].theta, m[v].theta), 1e-9);
  }
}

TEST(RoundTrip, RandomDrawingsOfRandomTrees) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-500.0, 500.0);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + uniform_index(rng, 50);
    const Graph g = test_support::random_tree(n, rng);
    auto t = std::make_shared<const RootedTree>(bfs_spanning_tree(g, static_cast<NodeId>(uniform_index(rng, n))));
    Drawing d;
    for (std::size_t v = 0; v < n; ++v) d.positions.push_back({coord(rng), coord(rng)});
    EXPECT_LT(max_position_error(to_drawing(from_drawing(d, t).model), d), 1e-9);
  }
}

TEST(ToDrawing, LocalityOfCoordinateChange) {
  // 0 has children 1, 2; 1 has child 3.
  auto t = std::make_shared<const RootedTree>(RootedTree::from_children(0, {{1, 2}, {3}, {}, {}}));
  ParentCenteredModel m = model(t, {{0, 0}, {1.0, 2.0}, {3.0, 2.0}, {2.5, 1.0}});
  const Drawing before = to_drawing(m);
  m.coords[1].theta += 0.4;
  const Drawing after = to_drawing(m);
  EXPECT_EQ(before[0], after[0]);
  EXPECT_EQ(before[2], after[2]);
  EXPECT_NE(before[1], after[1]);
  EXPECT_NE(before[3], after[3]);
}

TEST(AngleDifference, ReducesIntoHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(angle_difference(kPi, 0.0), kPi);
  EXPECT_DOUBLE_EQ(angle_difference(-kPi, 0.0), kPi);
  EXPECT_NEAR(angle_difference(0.1, 2 * kPi - 0.1), 0.2, 1e-12);
  EXPECT_NEAR(angle_difference(7 * kPi / 2, 0.0), -kPi / 2, 1e-12);
}
