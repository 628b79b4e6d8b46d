#include "radial/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "radial/metrics.hpp"

namespace radial {

std::size_t ExperimentConfig::graphs() const {
  return std::max<std::size_t>(1, graphs_per_order / std::max<std::size_t>(1, scale));
}

void ExperimentConfig::validate() const {
  if (order_min < 2 || order_max < order_min)
    throw std::invalid_argument("orders must be a non-empty range starting at 2 or more");
  if (graphs_per_order < 1) throw std::invalid_argument("graphs per order must be at least 1");
  if (scale < 1) throw std::invalid_argument("scale must be at least 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("edge probability must be in [0, 1]");
  if (samples < 2) throw std::invalid_argument("at least two crossing samples are required");
  animation.validate();
  yee.validate();
}

std::string ResultTable::to_csv() const {
  std::string out = kCsvHeader;
  out += '\n';
  for (const ResultRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.experiment, r.algorithm, r.order, r.graph_index,
                       r.seed, r.metric, r.value);
  }
  return out;
}

std::vector<const ResultRow*> ResultTable::select(const std::string& algorithm,
                                                  const std::string& metric) const {
  std::vector<const ResultRow*> out;
  for (const ResultRow& r : rows) {
    if (r.algorithm == algorithm && r.metric == metric) out.push_back(&r);
  }
  return out;
}

std::map<std::size_t, double> ResultTable::mean_by_order(const std::string& algorithm,
                                                         const std::string& metric) const {
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (const ResultRow* r : select(algorithm, metric)) {
    auto& [sum, count] = acc[r->order];
    sum += r->value;
    ++count;
  }
  std::map<std::size_t, double> out;
  for (const auto& [order, sc] : acc) out[order] = sc.first / static_cast<double>(sc.second);
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t order, std::size_t graph_index) {
  // splitmix64 finaliser over a simple combination.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(order) * 1000003ULL +
                                                   static_cast<std::uint64_t>(graph_index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TrialSetup make_trial(const ExperimentConfig& cfg, std::size_t order, std::size_t graph_index) {
  const std::uint64_t seed = trial_seed(cfg.seed, order, graph_index);
  std::mt19937_64 rng;
  Graph g = generate_random_graph(order, cfg.edge_prob, seed, &rng);
  const auto first = static_cast<NodeId>(uniform_index(rng, order));
  auto second = static_cast<NodeId>(uniform_index(rng, order - 1));
  if (second >= first) ++second;
  return {order, graph_index, seed, std::move(g), first, second};
}

namespace {

using TrialFn = std::function<std::vector<ResultRow>(const TrialSetup&)>;

// Runs every (order, graph) trial and concatenates rows in (order, graph) order
// regardless of which worker finished first.
ResultTable run_trials(const ExperimentConfig& cfg, const TrialFn& trial) {
  cfg.validate();
  const std::size_t per_order = cfg.graphs();
  const std::size_t total = cfg.order_count() * per_order;
  std::vector<std::vector<ResultRow>> slots(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        const std::size_t order = cfg.order_min + i / per_order;
        slots[i] = trial(make_trial(cfg, order, i % per_order));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, total);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ResultTable table;
  for (auto& rows : slots) {
    for (auto& r : rows) table.rows.push_back(std::move(r));
  }
  return table;
}

ResultRow row(const char* experiment, const char* algorithm, const TrialSetup& s,
              std::string metric, double value) {
  return {experiment, algorithm, s.order, s.graph_index, s.seed, std::move(metric), value};
}

Drawing pc_drawing(const RootedTree& t, const LayoutParams& layout) {
  return to_drawing(static_layout(std::make_shared<const RootedTree>(t), layout));
}

RootedTree ordered_for(const RootedTree& t, const Drawing& d_old, const AnimationParams& params) {
  return params.child_order == ChildOrder::kFollowDrawing ? order_children_by_drawing(t, d_old) : t;
}

}  // namespace

ResultTable run_experiment_iso(const ExperimentConfig& cfg) {
  return run_trials(cfg, [&cfg](const TrialSetup& s) {
    const RootedTree first = bfs_spanning_tree(s.graph, s.first_root);
    const RootedTree second = reroot_tree(first, s.second_root);
    const EdgeSet edges = first.edges();

    const Drawing pc_old = pc_drawing(first, cfg.animation.layout);
    const Timeline pc = animate_to_tree(pc_old, ordered_for(second, pc_old, cfg.animation), edges,
                                        cfg.animation);
    const Drawing yee_old = yee_static_layout(first, cfg.yee);
    const Timeline yee = yee_animate(yee_old, ordered_for(second, yee_old, cfg.animation), cfg.yee,
                                     first.parent(s.second_root), edges);

    return std::vector<ResultRow>{
        row("iso", kParentCentered, s, "crossings",
            static_cast<double>(count_transition_crossings(pc, edges, edges, cfg.samples).total())),
        row("iso", kRootCentered, s, "crossings",
            static_cast<double>(count_transition_crossings(yee, edges, edges, cfg.samples).total())),
    };
  });
}

ResultTable run_experiment_span(const ExperimentConfig& cfg) {
  return run_trials(cfg, [&cfg](const TrialSetup& s) {
    const RootedTree first = bfs_spanning_tree(s.graph, s.first_root);
    const RootedTree second = bfs_spanning_tree(s.graph, s.second_root);
    const EdgeSet old_edges = first.edges();
    const EdgeSet new_edges = second.edges();

    const Drawing pc_old = pc_drawing(first, cfg.animation.layout);
    const Timeline pc = animate_to_tree(pc_old, ordered_for(second, pc_old, cfg.animation),
                                        old_edges, cfg.animation);
    const Drawing yee_old = yee_static_layout(first, cfg.yee);
    const Timeline yee = yee_animate(yee_old, ordered_for(second, yee_old, cfg.animation), cfg.yee,
                                     first.parent(s.second_root), old_edges);

    const CrossingReport pc_report = count_transition_crossings(pc, old_edges, new_edges, cfg.samples);
    const CrossingReport yee_report =
        count_transition_crossings(yee, old_edges, new_edges, cfg.samples);
    return std::vector<ResultRow>{
        row("span", kParentCentered, s, "fading", static_cast<double>(pc_report.fading)),
        row("span", kParentCentered, s, "nonfading", static_cast<double>(pc_report.nonfading)),
        row("span", kRootCentered, s, "fading", static_cast<double>(yee_report.fading)),
        row("span", kRootCentered, s, "nonfading", static_cast<double>(yee_report.nonfading)),
    };
  });
}

ResultTable run_experiment_siblen(const ExperimentConfig& cfg) {
  return run_trials(cfg, [&cfg](const TrialSetup& s) {
    const RootedTree tree = bfs_spanning_tree(s.graph, s.first_root);
    std::vector<ResultRow> rows;
    auto emit = [&](const char* algorithm, const Drawing& d) {
      const SiblingLengthStats stats = sibling_edge_length_stats(d, tree);
      rows.push_back(row("siblen", algorithm, s, "height", static_cast<double>(tree.height())));
      rows.push_back(row("siblen", algorithm, s, "max_family_std", stats.max_family_std()));
      for (const DepthLengthStats& d : stats.depths) {
        rows.push_back(row("siblen", algorithm, s, fmt::format("depth_{}_mean", d.depth), d.mean));
        rows.push_back(row("siblen", algorithm, s, fmt::format("depth_{}_std", d.depth), d.std));
      }
    };
    emit(kParentCentered, pc_drawing(tree, cfg.animation.layout));
    emit(kRootCentered, yee_static_layout(tree, cfg.yee));
    return rows;
  });
}

ResultTable run_experiment(const std::string& name, const ExperimentConfig& cfg) {
  if (name == "iso") return run_experiment_iso(cfg);
  if (name == "span") return run_experiment_span(cfg);
  if (name == "siblen") return run_experiment_siblen(cfg);
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

nlohmann::json experiment_manifest(const std::string& name, const ExperimentConfig& cfg) {
  const auto& a = cfg.animation;
  return {
      {"experiment", name},
      {"orders", {cfg.order_min, cfg.order_max}},
      {"graphs_per_order", cfg.graphs_per_order},
      {"scale", cfg.scale},
      {"graphs_run_per_order", cfg.graphs()},
      {"edge_prob", cfg.edge_prob},
      {"seed", cfg.seed},
      {"samples_per_transition", cfg.samples},
      {"csv_header", kCsvHeader},
      {"pc",
       {{"root_radius", a.layout.root_radius},
        {"phi", a.layout.arc_angle},
        {"steps", a.steps},
        {"radius_blend", a.radius_blend == RadiusBlend::kLinear ? "linear" : "geometric"},
        {"child_order", a.child_order == ChildOrder::kTree ? "tree" : "follow-drawing"}}},
      {"yee", {{"ring_spacing", cfg.yee.ring_spacing}, {"frames", cfg.yee.steps}}},
  };
}

}  // namespace radial
