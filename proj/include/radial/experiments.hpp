#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "radial/animation.hpp"
#include "radial/layout_yee.hpp"
#include "radial/metrics.hpp"

namespace radial {

struct ExperimentConfig {
  std::size_t order_min = 30;
  std::size_t order_max = 100;
  std::size_t graphs_per_order = 10;
  double edge_prob = 0.1;
  std::uint64_t seed = 1;
  std::size_t samples = kDefaultCrossingSamples;
  /// Divides graphs_per_order (at least one graph per order remains).
  std::size_t scale = 1;
  AnimationParams animation;
  YeeParams yee;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 0;

  std::size_t graphs() const;
  std::size_t order_count() const { return order_max - order_min + 1; }
  void validate() const;
};

inline constexpr const char* kParentCentered = "pc";
inline constexpr const char* kRootCentered = "yee";

struct ResultRow {
  std::string experiment;
  std::string algorithm;
  std::size_t order = 0;
  std::size_t graph_index = 0;
  std::uint64_t seed = 0;
  std::string metric;
  double value = 0.0;
};

struct ResultTable {
  std::vector<ResultRow> rows;

  /// Header plus one line per row, '\n' terminated.
  std::string to_csv() const;
  /// Rows matching algorithm and metric.
  std::vector<const ResultRow*> select(const std::string& algorithm,
                                       const std::string& metric) const;
  /// Mean value per order for one algorithm and metric.
  std::map<std::size_t, double> mean_by_order(const std::string& algorithm,
                                              const std::string& metric) const;
};

inline constexpr const char* kCsvHeader = "experiment,algorithm,order,graph_index,seed,metric,value";

/// Everything one trial starts from: graph and two distinct roots, all drawn
/// from one seeded stream.
struct TrialSetup {
  std::size_t order = 0;
  std::size_t graph_index = 0;
  std::uint64_t seed = 0;
  Graph graph;
  NodeId first_root = 0;
  NodeId second_root = 0;
};

/// Per-trial seed mixed from the experiment seed, order and graph index.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t order, std::size_t graph_index);

TrialSetup make_trial(const ExperimentConfig& cfg, std::size_t order, std::size_t graph_index);

/// Transitions between two drawings of the same tree, re-rooted. Metric:
/// `crossings`.
ResultTable run_experiment_iso(const ExperimentConfig& cfg);

/// Transitions between breadth-first trees of two different roots. Metrics:
/// `fading`, `nonfading`.
ResultTable run_experiment_span(const ExperimentConfig& cfg);

/// Sibling edge lengths of both static layouts. Metrics: `max_family_std`,
/// `height`, and `depth_<d>_mean` / `depth_<d>_std` for every depth d.
ResultTable run_experiment_siblen(const ExperimentConfig& cfg);

/// Dispatch on "iso", "span" or "siblen".
ResultTable run_experiment(const std::string& name, const ExperimentConfig& cfg);

nlohmann::json experiment_manifest(const std::string& name, const ExperimentConfig& cfg);

}  // namespace radial
