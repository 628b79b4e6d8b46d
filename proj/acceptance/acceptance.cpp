// Acceptance suite: one PASS/FAIL line per criterion. Run without arguments
// for all of them, or with `--criterion N` (N = 1..9, or "sweep") for one.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "radial/experiments.hpp"
#include "radial/metrics.hpp"
#include "support/random_trees.hpp"

using namespace radial;

namespace {

// Pinned tolerances and sizes.
constexpr double kStdTolerance = 1e-9;
constexpr double kPositionTolerance = 1e-9;
constexpr double kCollinearTolerance = 1e-9;
constexpr double kFadingFactor = 3.0;
constexpr double kBaselineStdShare = 0.5;
constexpr std::size_t kDeskScale = 10;
constexpr std::size_t kTreeTrials = 1000;
constexpr std::size_t kMaxTreeOrder = 60;
constexpr std::size_t kMinGeneralOrder = 20;
constexpr std::size_t kRoundTripTrials = 1000;
constexpr std::size_t kMaxRoundTripOrder = 50;
constexpr double kRoundTripExtent = 1000.0;
constexpr std::size_t kTransitionTrials = 100;
constexpr std::size_t kSamples = 256;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ExperimentConfig desk_config() {
  ExperimentConfig cfg;
  cfg.scale = kDeskScale;
  return cfg;
}

double mean(const std::vector<const ResultRow*>& rows) {
  double sum = 0.0;
  for (const ResultRow* r : rows) sum += r->value;
  return rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
}

double bucket_mean(const ResultTable& t, const char* alg, const char* metric, std::size_t lo,
                   std::size_t hi) {
  std::vector<const ResultRow*> rows;
  for (const ResultRow* r : t.select(alg, metric)) {
    if (r->order >= lo && r->order <= hi) rows.push_back(r);
  }
  return mean(rows);
}

Drawing pc_drawing(const RootedTree& t, const LayoutParams& p) {
  return to_drawing(static_layout(std::make_shared<const RootedTree>(t), p));
}

std::pair<NodeId, NodeId> two_roots(std::mt19937_64& rng, std::size_t n) {
  const auto a = static_cast<NodeId>(uniform_index(rng, n));
  auto b = static_cast<NodeId>(uniform_index(rng, n - 1));
  if (b >= a) ++b;
  return {a, b};
}

// One re-root transition: graph, old drawing from the parent-centred layout at
// the first root, animation to the second.
struct Transition {
  Graph graph;
  RootedTree old_tree;
  Drawing old_drawing;
  NodeId new_root;
};

Transition make_transition(Graph g, std::mt19937_64& rng, const LayoutParams& layout) {
  const auto [r1, r2] = two_roots(rng, g.node_count());
  RootedTree t1 = bfs_spanning_tree(g, r1);
  Drawing d = pc_drawing(t1, layout);
  return {std::move(g), std::move(t1), std::move(d), r2};
}

std::vector<Transition> tree_transitions() {
  std::mt19937_64 rng(kSeed);
  std::vector<Transition> out;
  for (std::size_t i = 0; i < kTreeTrials; ++i) {
    const std::size_t n = 2 + uniform_index(rng, kMaxTreeOrder - 1);
    out.push_back(make_transition(test_support::random_tree(n, rng), rng, LayoutParams{}));
  }
  return out;
}

std::vector<Transition> general_transitions(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Transition> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = kMinGeneralOrder + uniform_index(rng, kMaxTreeOrder - kMinGeneralOrder + 1);
    Graph g = generate_random_graph(n, 0.1, rng());
    out.push_back(make_transition(std::move(g), rng, LayoutParams{}));
  }
  return out;
}

// Number of tree transitions with at least one tree-edge crossing at any sample.
std::size_t crossing_tree_trials(const std::vector<Transition>& trials, const AnimationParams& p) {
  std::size_t bad = 0;
  for (const Transition& tr : trials) {
    Drawing d = pc_drawing(tr.old_tree, p.layout);
    const Timeline tl = animate(tr.graph, d, tr.new_root, p);
    const EdgeSet edges = tr.graph.edges();
    if (count_transition_crossings(tl, edges, edges, kSamples).total() != 0) ++bad;
  }
  return bad;
}

Outcome criterion_iso() {
  const auto start = Clock::now();
  const ResultTable t = run_experiment_iso(desk_config());
  const auto pc = t.select(kParentCentered, "crossings");
  const auto yee = t.select(kRootCentered, "crossings");
  std::size_t pc_bad = 0;
  double pc_total = 0.0;
  for (const ResultRow* r : pc) {
    pc_bad += r->value != 0.0;
    pc_total += r->value;
  }
  const double yee_mean = mean(yee);
  const double elapsed = seconds_since(start);

  // Diagnostic: trials whose static start or end layout already has a crossing.
  const ExperimentConfig cfg = desk_config();
  std::size_t static_bad = 0;
  for (std::size_t order = cfg.order_min; order <= cfg.order_max; ++order) {
    const TrialSetup s = make_trial(cfg, order, 0);
    const RootedTree first = bfs_spanning_tree(s.graph, s.first_root);
    const RootedTree second = reroot_tree(first, s.second_root);
    const EdgeSet edges = first.edges();
    static_bad += count_static_crossings(pc_drawing(first, cfg.animation.layout), edges) != 0 ||
                  count_static_crossings(pc_drawing(second, cfg.animation.layout), edges) != 0;
  }
  return {pc_bad == 0 && yee_mean > 0.0 && elapsed < 120.0,
          fmt::format("pc trials with crossings {}/{} (total {}), baseline mean {:.3f}, {:.1f}s; "
                      "{} trials have a crossing in a static endpoint layout",
                      pc_bad, pc.size(), pc_total, yee_mean, elapsed, static_bad)};
}

Outcome criterion_span() {
  const ResultTable t = run_experiment_span(desk_config());
  const double pc_nf = mean(t.select(kParentCentered, "nonfading"));
  const double yee_nf = mean(t.select(kRootCentered, "nonfading"));
  const double gap_low = bucket_mean(t, kRootCentered, "nonfading", 30, 50) -
                         bucket_mean(t, kParentCentered, "nonfading", 30, 50);
  const double gap_high = bucket_mean(t, kRootCentered, "nonfading", 81, 100) -
                          bucket_mean(t, kParentCentered, "nonfading", 81, 100);
  const double pc_f = mean(t.select(kParentCentered, "fading"));
  const double yee_f = mean(t.select(kRootCentered, "fading"));
  const bool a = pc_nf < yee_nf;
  const bool b = gap_high > gap_low;
  const bool c = pc_f > 0.0 && yee_f > 0.0 && std::max(pc_f, yee_f) <= kFadingFactor * std::min(pc_f, yee_f);
  return {a && b && c,
          fmt::format("(a) nonfading pc {:.2f} < baseline {:.2f}: {}; (b) gap 81-100 {:.2f} > gap "
                      "30-50 {:.2f}: {}; (c) fading pc {:.2f} vs baseline {:.2f} within x{}: {}",
                      pc_nf, yee_nf, a ? "yes" : "no", gap_high, gap_low, b ? "yes" : "no", pc_f,
                      yee_f, kFadingFactor, c ? "yes" : "no")};
}

Outcome criterion_siblen() {
  const ResultTable t = run_experiment_siblen(desk_config());
  double pc_worst = 0.0;
  for (const ResultRow* r : t.select(kParentCentered, "max_family_std"))
    pc_worst = std::max(pc_worst, r->value);

  const auto heights = t.select(kRootCentered, "height");
  const auto stds = t.select(kRootCentered, "max_family_std");
  std::size_t deep = 0, varied = 0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i]->value < 2.0) continue;
    ++deep;
    varied += stds[i]->value > kStdTolerance;
  }
  const double share = deep == 0 ? 0.0 : static_cast<double>(varied) / static_cast<double>(deep);
  return {pc_worst <= kStdTolerance && deep > 0 && share >= kBaselineStdShare,
          fmt::format("pc worst sibling std {:.3g}; baseline std > 0 in {}/{} trials of depth >= 2 "
                      "({:.0f}%)",
                      pc_worst, varied, deep, 100.0 * share)};
}

Outcome criterion_tree_planarity() {
  const auto trials = tree_transitions();
  std::size_t bad = 0, static_bad = 0;
  for (const Transition& tr : trials) {
    const Timeline tl = animate(tr.graph, tr.old_drawing, tr.new_root);
    const EdgeSet edges = tr.graph.edges();
    if (count_transition_crossings(tl, edges, edges, kSamples).total() != 0) ++bad;
    if (count_static_crossings(tr.old_drawing, edges) != 0 ||
        count_static_crossings(tl.last(), edges) != 0)
      ++static_bad;
  }
  return {bad == 0, fmt::format("{}/{} transitions with a tree-edge crossing; {} of them start or "
                                "end on a static layout that already crosses",
                                bad, trials.size(), static_bad)};
}

Outcome criterion_fans() {
  const auto trials = general_transitions(kTreeTrials, kSeed + 1);
  const auto times = crossing_sample_times(kSamples);
  auto fan_crossed = [](const RootedTree& t, const Drawing& d) {
    for (NodeId v = 0; v < t.node_count(); ++v) {
      // The fan of v: edges to its children and to its parent.
      std::vector<NodeId> ends = t.children(v);
      if (auto p = t.parent(v)) ends.push_back(*p);
      for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
          if (segments_cross(d[v], d[ends[i]], d[v], d[ends[j]])) return true;
        }
      }
    }
    return false;
  };
  std::size_t bad = 0, bad_at_start = 0, bad_later = 0;
  for (const Transition& tr : trials) {
    const Timeline tl = animate(tr.graph, tr.old_drawing, tr.new_root, AnimationParams{},
                                tr.old_tree.edges());
    const bool start = fan_crossed(*tl.tree, tl.evaluate(0.0));
    bool later = false;
    for (double time : times) {
      if (time > 0.0 && fan_crossed(*tl.tree, tl.evaluate(time))) {
        later = true;
        break;
      }
    }
    bad += start || later;
    bad_at_start += start;
    bad_later += later;
  }
  return {bad == 0, fmt::format("{}/{} general-graph transitions with a crossing parent-child fan "
                                "({} in the starting drawing at t = 0, {} at some t > 0)",
                                bad, trials.size(), bad_at_start, bad_later)};
}

Outcome criterion_round_trip() {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> coord(-kRoundTripExtent, kRoundTripExtent);
  double worst = 0.0;
  for (std::size_t i = 0; i < kRoundTripTrials; ++i) {
    const std::size_t n = 1 + uniform_index(rng, kMaxRoundTripOrder);
    const Graph g = test_support::random_tree(n, rng);
    auto tree = std::make_shared<const RootedTree>(
        bfs_spanning_tree(g, static_cast<NodeId>(uniform_index(rng, n))));
    Drawing d;
    for (std::size_t v = 0; v < n; ++v) d.positions.push_back({coord(rng), coord(rng)});
    worst = std::max(worst, max_position_error(to_drawing(from_drawing(d, tree).model), d));
  }
  return {worst < kPositionTolerance,
          fmt::format("worst round-trip error {:.3g} over {} drawings", worst, kRoundTripTrials)};
}

Outcome criterion_endpoints() {
  std::mt19937_64 rng(kSeed + 3);
  double worst_start = 0.0, worst_model = 0.0, worst_end = 0.0, worst_line = 0.0;
  const auto times = crossing_sample_times(kSamples);
  for (std::size_t i = 0; i < kTransitionTrials; ++i) {
    const std::size_t n = kMinGeneralOrder + uniform_index(rng, kMaxTreeOrder - kMinGeneralOrder + 1);
    const Graph g = generate_random_graph(n, 0.1, rng());
    // Alternate between arbitrary spring drawings and parent-centred ones.
    const auto [r1, r2] = two_roots(rng, n);
    const Drawing d_old = i % 2 == 0 ? force_directed_layout(g, kDefaultSpringIterations, rng())
                                     : pc_drawing(bfs_spanning_tree(g, r1), LayoutParams{});
    const Timeline tl = animate(g, d_old, r2);
    const Drawing d_new = pc_drawing(*tl.tree, LayoutParams{});
    worst_start = std::max(worst_start, max_position_error(tl.first(), d_old));
    // The timeline hands back d_old verbatim at t = 0; the interpolated model
    // must agree with it too.
    const auto m_old = from_drawing(d_old, tl.tree).model;
    const auto m_new = static_layout(tl.tree, LayoutParams{});
    worst_model = std::max(worst_model, max_position_error(frame_at(m_old, m_new, 0.0), d_old));
    worst_end = std::max(worst_end, max_position_error(tl.last(), d_new));

    const Point a = d_old[r2];
    const double len = std::hypot(a.x, a.y);
    auto residual = [&](Point q) {
      return len == 0.0 ? std::hypot(q.x, q.y) : std::abs(a.x * q.y - a.y * q.x) / len;
    };
    for (const Frame& f : tl.frames) worst_line = std::max(worst_line, residual(f.drawing[r2]));
    for (double t : times) worst_line = std::max(worst_line, residual(tl.evaluate(t)[r2]));
  }
  return {worst_start < kPositionTolerance && worst_model < kPositionTolerance &&
              worst_end < kPositionTolerance && worst_line < kCollinearTolerance,
          fmt::format("worst frame(0) error {:.3g} (model at t=0: {:.3g}), frame(1) error {:.3g}, "
                      "root collinearity residual {:.3g}",
                      worst_start, worst_model, worst_end, worst_line)};
}

bool same_report(const CrossingReport& a, const CrossingReport& b) {
  return a.fading == b.fading && a.nonfading == b.nonfading && a.pairs == b.pairs;
}

Outcome criterion_sampling() {
  const auto trials = general_transitions(kTransitionTrials, kSeed + 4);
  std::size_t changed = 0, reports = 0, pairs = 0, extra = 0;
  for (const Transition& tr : trials) {
    const EdgeSet old_edges = tr.old_tree.edges();
    const Timeline pc = animate(tr.graph, tr.old_drawing, tr.new_root, AnimationParams{}, old_edges);
    const RootedTree target = order_children_by_drawing(bfs_spanning_tree(tr.graph, tr.new_root),
                                                        yee_static_layout(tr.old_tree));
    const Timeline yee = yee_animate(yee_static_layout(tr.old_tree), target, YeeParams{},
                                     tr.old_tree.parent(tr.new_root), old_edges);
    for (const Timeline* tl : {&pc, &yee}) {
      const EdgeSet new_edges = tl->new_edges;
      const CrossingReport coarse = count_transition_crossings(*tl, old_edges, new_edges, kSamples);
      const CrossingReport fine = count_transition_crossings(*tl, old_edges, new_edges, 2 * kSamples);
      ++reports;
      changed += !same_report(coarse, fine);
      pairs += fine.total();
      extra += fine.total() - coarse.total();
    }
  }
  return {changed == 0,
          fmt::format("{}/{} reports changed when doubling {} samples to {}; {} of {} crossed "
                      "pairs appear only at the finer grid",
                      changed, reports, kSamples, 2 * kSamples, extra, pairs)};
}

Outcome criterion_determinism() {
  std::vector<std::string> differing;
  for (const char* name : {"iso", "span", "siblen"}) {
    ExperimentConfig serial = desk_config();
    serial.jobs = 1;
    ExperimentConfig parallel = desk_config();
    parallel.jobs = 4;
    const std::string first = run_experiment(name, serial).to_csv();
    if (first != run_experiment(name, serial).to_csv() ||
        first != run_experiment(name, parallel).to_csv())
      differing.push_back(name);
  }
  return {differing.empty(), differing.empty()
                                 ? std::string("iso, span and siblen CSV byte-identical across "
                                               "repeat and 1/4-worker runs")
                                 : fmt::format("differing: {}", fmt::join(differing, ", "))};
}

// Largest φ on a descending grid with no crossing, for both radius blends.
Outcome sweep_report() {
  std::vector<double> grid{std::numbers::pi};
  for (double phi = 3.0; phi > 0.1; phi -= 0.25) grid.push_back(phi);

  const auto trees = tree_transitions();
  std::string detail;
  for (RadiusBlend blend : {RadiusBlend::kLinear, RadiusBlend::kGeometric}) {
    const char* name = blend == RadiusBlend::kLinear ? "linear" : "geometric";
    std::string steps;
    double best = 0.0;
    for (double phi : grid) {
      AnimationParams p;
      p.layout.arc_angle = phi;
      p.radius_blend = blend;
      const std::size_t bad = crossing_tree_trials(trees, p);
      steps += fmt::format(" {:.2f}:{}", phi, bad);
      if (bad == 0) {
        best = phi;
        break;
      }
    }
    detail += fmt::format("\n    trees, {} radius blend: largest phi with zero crossings {} "
                          "(phi:bad trials{})",
                          name, best > 0.0 ? fmt::format("{:.2f}", best) : "none", steps);

    steps.clear();
    best = 0.0;
    for (double phi : grid) {
      ExperimentConfig cfg = desk_config();
      cfg.animation.layout.arc_angle = phi;
      cfg.animation.radius_blend = blend;
      std::size_t bad = 0;
      for (const ResultRow* r : run_experiment_iso(cfg).select(kParentCentered, "crossings"))
        bad += r->value != 0.0;
      steps += fmt::format(" {:.2f}:{}", phi, bad);
      if (bad == 0) {
        best = phi;
        break;
      }
    }
    detail += fmt::format("\n    iso experiment, {} radius blend: largest phi with zero "
                          "crossings {} (phi:bad trials{})",
                          name, best > 0.0 ? fmt::format("{:.2f}", best) : "none", steps);
  }
  detail.erase(0, detail.find_first_not_of("\n "));
  return {true, detail};
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {"1", "isomorphic-tree transitions cross-free", criterion_iso},
      {"2", "spanning-tree transition trends", criterion_span},
      {"3", "sibling edge lengths", criterion_siblen},
      {"4", "tree transitions planar at phi = pi", criterion_tree_planarity},
      {"5", "parent-child fans cross-free", criterion_fans},
      {"6", "drawing/model round trip", criterion_round_trip},
      {"7", "animation endpoints and root path", criterion_endpoints},
      {"8", "crossing sampling stability", criterion_sampling},
      {"9", "experiment determinism", criterion_determinism},
      {"sweep", "phi and radius-blend sweep (report only)", sweep_report},
  };

  std::string only;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    only = argv[2];
  } else if (argc != 1) {
    fmt::print(stderr, "usage: {} [--criterion <1-9|sweep>]\n", argv[0]);
    return 2;
  }

  bool ok = true;
  bool matched = false;
  for (const Criterion& c : all) {
    // The sweep is slow and informational; it runs only when asked for.
    if (only.empty() ? c.id == "sweep" : c.id != only) continue;
    matched = true;
    const auto start = Clock::now();
    const Outcome o = c.run();
    ok = ok && o.pass;
    const char* verdict = c.id == "sweep" ? "REPORT" : (o.pass ? "PASS" : "FAIL");
    fmt::print("criterion {} {}: {} ({:.1f}s)\n    {}\n", c.id, verdict, c.title,
               seconds_since(start), o.detail);
    std::fflush(stdout);
  }
  if (!matched) {
    fmt::print(stderr, "unknown criterion '{}'\n", only);
    return 2;
  }
  return ok ? 0 : 1;
}
