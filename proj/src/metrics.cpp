#include "radial/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radial/animation.hpp"

namespace radial {

namespace {

constexpr double kOrientEpsilon = 1e-12;

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

// Sign of the turn a -> b -> c; determinants within a relative 1e-12 band are
// treated as collinear.
int orientation(Point a, Point b, Point c) {
  Point u = b - a;
  Point v = c - a;
  double det = cross(u, v);
  double scale = std::hypot(u.x, u.y) * std::hypot(v.x, v.y);
  if (std::abs(det) <= kOrientEpsilon * scale) return 0;
  return det > 0.0 ? 1 : -1;
}

// c is known to be collinear with ab.
bool within_box(Point a, Point b, Point c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// Segments s-u and s-w share the endpoint s.
bool overlap_from_shared(Point s, Point u, Point w) {
  if (u == s || w == s) return false;
  return orientation(s, u, w) == 0 && dot(u - s, w - s) > 0.0;
}

}  // namespace

bool segments_cross(Point p1, Point p2, Point q1, Point q2) {
  if ((p1 == q1 && p2 == q2) || (p1 == q2 && p2 == q1)) return !(p1 == p2);
  if (p1 == q1) return overlap_from_shared(p1, p2, q2);
  if (p1 == q2) return overlap_from_shared(p1, p2, q1);
  if (p2 == q1) return overlap_from_shared(p2, p1, q2);
  if (p2 == q2) return overlap_from_shared(p2, p1, q1);

  // Bounding boxes must meet.
  if (std::max(p1.x, p2.x) < std::min(q1.x, q2.x) || std::max(q1.x, q2.x) < std::min(p1.x, p2.x) ||
      std::max(p1.y, p2.y) < std::min(q1.y, q2.y) || std::max(q1.y, q2.y) < std::min(p1.y, p2.y))
    return false;

  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(p1, p2, q1)) return true;
  if (o2 == 0 && within_box(p1, p2, q2)) return true;
  if (o3 == 0 && within_box(q1, q2, p1)) return true;
  if (o4 == 0 && within_box(q1, q2, p2)) return true;
  return false;
}

std::vector<std::pair<Edge, Edge>> static_crossing_pairs(const Drawing& d, const EdgeSet& edges) {
  const auto& list = edges.items();
  for (const Edge& e : list) {
    if (e.b >= d.size()) throw std::invalid_argument("drawing misses an edge endpoint");
  }
  std::vector<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const Edge& e = list[i];
      const Edge& f = list[j];
      if (segments_cross(d[e.a], d[e.b], d[f.a], d[f.b])) out.emplace_back(e, f);
    }
  }
  return out;
}

std::size_t count_static_crossings(const Drawing& d, const EdgeSet& edges) {
  return static_crossing_pairs(d, edges).size();
}

std::vector<double> crossing_sample_times(std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("at least two crossing samples are required");
  std::vector<double> times(samples + 1);
  for (std::size_t k = 0; k <= samples; ++k) {
    times[k] = static_cast<double>(k) / static_cast<double>(samples);
  }
  return times;
}

CrossingReport count_transition_crossings(const Timeline& tl, const EdgeSet& old_edges,
                                          const EdgeSet& new_edges, std::size_t samples) {
  const std::vector<double> times = crossing_sample_times(samples);
  if (!tl.evaluate) throw std::invalid_argument("timeline has no interpolator");

  const EdgeSet universe = old_edges.united(new_edges);
  const auto& list = universe.items();
  const std::size_t m = list.size();
  std::vector<bool> crossed(m * m, false);

  for (double t : times) {
    const Drawing d = tl.evaluate(t);
    for (const Edge& e : list) {
      if (e.b >= d.size()) throw std::invalid_argument("timeline misses an edge endpoint");
    }
    for (std::size_t i = 0; i < m; ++i) {
      const Point a1 = d[list[i].a];
      const Point a2 = d[list[i].b];
      for (std::size_t j = i + 1; j < m; ++j) {
        if (crossed[i * m + j]) continue;
        if (segments_cross(a1, a2, d[list[j].a], d[list[j].b])) crossed[i * m + j] = true;
      }
    }
  }

  CrossingReport report;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!crossed[i * m + j]) continue;
      report.pairs.emplace_back(list[i], list[j]);
      if (new_edges.contains(list[i]) && new_edges.contains(list[j])) {
        ++report.nonfading;
      } else {
        ++report.fading;
      }
    }
  }
  return report;
}

double SiblingLengthStats::max_family_std() const {
  double worst = 0.0;
  for (const auto& d : depths) worst = std::max(worst, d.max_family_std);
  return worst;
}

SiblingLengthStats sibling_edge_length_stats(const Drawing& d, const RootedTree& t) {
  if (d.size() < t.node_count()) throw std::invalid_argument("drawing does not cover the tree");
  struct Accumulator {
    double sum = 0.0;
    double squared_deviation = 0.0;
    double max_family_std = 0.0;
    std::size_t count = 0;
  };
  std::vector<Accumulator> acc(t.height());

  std::vector<double> lengths;
  for (NodeId v : t.top_down()) {
    const auto& kids = t.children(v);
    if (kids.empty()) continue;
    lengths.clear();
    for (NodeId c : kids) lengths.push_back(distance(d[c], d[v]));
    double mean = 0.0;
    for (double l : lengths) mean += l;
    mean /= static_cast<double>(lengths.size());
    double sq = 0.0;
    for (double l : lengths) sq += (l - mean) * (l - mean);

    Accumulator& a = acc[t.depth(v)];  // children sit at depth(v) + 1
    for (double l : lengths) a.sum += l;
    a.squared_deviation += sq;
    a.count += lengths.size();
    a.max_family_std =
        std::max(a.max_family_std, std::sqrt(sq / static_cast<double>(lengths.size())));
  }

  SiblingLengthStats stats;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const Accumulator& a = acc[i];
    const double n = static_cast<double>(a.count);
    stats.depths.push_back({i + 1, a.sum / n, std::sqrt(a.squared_deviation / n),
                            a.max_family_std, a.count});
  }
  return stats;
}

}  // namespace radial
