#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "radial/coords.hpp"
#include "radial/graph.hpp"

namespace radial {

struct Timeline;

/// True iff closed segments p1p2 and q1q2 meet somewhere other than a shared
/// endpoint. Touching (T-junctions) counts; collinear overlap along more than
/// one point counts even for segments that share an endpoint.
bool segments_cross(Point p1, Point p2, Point q1, Point q2);

/// Unordered edge pairs that cross in `d`.
std::size_t count_static_crossings(const Drawing& d, const EdgeSet& edges);

/// Crossed pairs themselves, in lexicographic (edge, edge) order.
std::vector<std::pair<Edge, Edge>> static_crossing_pairs(const Drawing& d, const EdgeSet& edges);

struct CrossingReport {
  /// Pairs with at least one edge missing from the final drawing.
  std::size_t fading = 0;
  /// Pairs with both edges in the final drawing.
  std::size_t nonfading = 0;
  std::vector<std::pair<Edge, Edge>> pairs;

  std::size_t total() const { return fading + nonfading; }
  bool operator==(const CrossingReport&) const = default;
};

inline constexpr std::size_t kDefaultCrossingSamples = 256;

/// Times k / samples for k = 0..samples. Doubling `samples` refines the grid.
std::vector<double> crossing_sample_times(std::size_t samples);

/// Counts each pair of edges from old_edges | new_edges at most once if it
/// crosses at any sample time. Positions are re-evaluated from the timeline's
/// interpolator, not taken from its stored frames. Throws std::invalid_argument
/// if samples < 2 or the timeline cannot be evaluated.
CrossingReport count_transition_crossings(const Timeline& tl, const EdgeSet& old_edges,
                                          const EdgeSet& new_edges,
                                          std::size_t samples = kDefaultCrossingSamples);

struct DepthLengthStats {
  std::size_t depth = 0;
  /// Mean parent-child edge length over all nodes at this depth.
  double mean = 0.0;
  /// Pooled within-family standard deviation: root mean square deviation of
  /// each edge length from its own sibling set's mean.
  double std = 0.0;
  /// Largest population standard deviation of a single sibling set.
  double max_family_std = 0.0;
  std::size_t samples = 0;
};

struct SiblingLengthStats {
  std::vector<DepthLengthStats> depths;  // depth 1, 2, ...

  double max_family_std() const;
};

SiblingLengthStats sibling_edge_length_stats(const Drawing& d, const RootedTree& t);

}  // namespace radial
