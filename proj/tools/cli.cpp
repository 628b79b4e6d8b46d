#include "cli.hpp"

#include <cstdlib>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "radial/experiments.hpp"
#include "radial/io.hpp"
#include "radial/layout_yee.hpp"
#include "radial/server.hpp"
#include "radial/svg.hpp"

namespace radial::cli {

namespace {

/// Bad flag values found after parsing; reported with the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<std::uint64_t> seed;
  std::string output;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("RADIAL_EXPLORER_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("RADIAL_EXPLORER_SEED is not an unsigned integer: ") + env);
    }
    return 1;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "Random seed (falls back to $RADIAL_EXPLORER_SEED, then 1)");
  cmd->add_option("--output,-o", common.output, "Output file (default: standard output)");
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.output.empty()) {
    out << text;
  } else {
    write_text_file(common.output, text);
  }
}

struct LayoutFlags {
  double root_radius = 100.0;
  double phi = std::numbers::pi;
  std::size_t steps = 30;
  double ring_spacing = 100.0;
  std::string algorithm = "pc";

  AnimationParams animation() const {
    AnimationParams p;
    p.layout.root_radius = root_radius;
    p.layout.arc_angle = phi;
    p.steps = steps;
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return p;
  }

  // --steps counts intermediate frames for both algorithms.
  YeeParams yee() const {
    YeeParams p;
    p.ring_spacing = ring_spacing;
    p.steps = steps + 2;
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

void add_layout_flags(CLI::App* cmd, LayoutFlags& f, bool with_steps) {
  cmd->add_option("--algorithm", f.algorithm, "Layout algorithm")
      ->check(CLI::IsMember({"pc", "yee"}))
      ->capture_default_str();
  cmd->add_option("--root-radius", f.root_radius, "Distance of the root's children")->capture_default_str();
  cmd->add_option("--phi", f.phi, "Containment arc angle in radians")->capture_default_str();
  cmd->add_option("--ring-spacing", f.ring_spacing, "Ring spacing of the root-centred baseline")
      ->capture_default_str();
  if (with_steps)
    cmd->add_option("--steps", f.steps, "Intermediate frames per transition")->capture_default_str();
}

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

NodeId checked_node(const Graph& g, std::int64_t v, const char* what) {
  if (v < 0 || static_cast<std::uint64_t>(v) >= g.node_count())
    throw FormatError(std::string(what) + " " + std::to_string(v) + " is not a node of the graph");
  return static_cast<NodeId>(v);
}

std::pair<std::size_t, std::size_t> parse_orders(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || s.front() == '-')
      throw UsageError("--orders expects a..b or a single order, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parent-centred radial graph layouts, transitions and experiments", "radial_explorer"};
  app.require_subcommand(1);

  // generate
  Common gen_common;
  std::size_t gen_nodes = 0;
  double gen_prob = 0.1;
  auto* generate = app.add_subcommand("generate", "Write a connected random graph");
  generate->add_option("--nodes,-n", gen_nodes, "Node count")->required()->check(CLI::PositiveNumber);
  generate->add_option("--edge-prob", gen_prob, "Edge probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_common(generate, gen_common);

  // layout
  Common lay_common;
  LayoutFlags lay_flags;
  std::string lay_graph, lay_tree_output;
  std::int64_t lay_root = 0;
  auto* layout = app.add_subcommand("layout", "Static radial layout of a graph's breadth-first tree");
  layout->add_option("--graph", lay_graph, "Graph file")->required();
  layout->add_option("--root", lay_root, "Root node")->capture_default_str();
  layout->add_option("--tree-output", lay_tree_output, "Also write the spanning tree here");
  add_layout_flags(layout, lay_flags, false);
  add_common(layout, lay_common);

  // animate
  Common anim_common;
  LayoutFlags anim_flags;
  std::string anim_graph, anim_drawing, anim_old_tree;
  std::int64_t anim_root = 0;
  auto* animate_cmd = app.add_subcommand("animate", "Timeline of a re-rooting transition (JSON lines)");
  animate_cmd->add_option("--graph", anim_graph, "Graph file")->required();
  animate_cmd->add_option("--root", anim_root, "New root")->required();
  animate_cmd->add_option("--drawing", anim_drawing,
                          "Starting drawing (default: spring layout seeded by --seed)");
  animate_cmd->add_option("--old-tree", anim_old_tree,
                          "Tree shown in the starting drawing (default: all graph edges shown)");
  add_layout_flags(animate_cmd, anim_flags, true);
  add_common(animate_cmd, anim_common);

  // experiment
  Common exp_common;
  LayoutFlags exp_flags;
  std::string exp_name, exp_orders = "30..100";
  ExperimentConfig exp_cfg;
  auto* experiment = app.add_subcommand("experiment", "Run a batch experiment and write CSV");
  experiment->add_option("name", exp_name, "iso, span or siblen")
      ->required()
      ->check(CLI::IsMember({"iso", "span", "siblen"}));
  experiment->add_option("--orders", exp_orders, "Graph orders a..b")->capture_default_str();
  experiment->add_option("--graphs-per-order", exp_cfg.graphs_per_order, "Graphs per order")
      ->capture_default_str();
  experiment->add_option("--edge-prob", exp_cfg.edge_prob, "Edge probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  experiment->add_option("--scale", exp_cfg.scale, "Divide graphs per order by this")
      ->capture_default_str();
  experiment->add_option("--samples", exp_cfg.samples, "Crossing samples per transition")
      ->capture_default_str();
  experiment->add_option("--jobs", exp_cfg.jobs, "Worker threads (0: hardware concurrency)")
      ->capture_default_str();
  add_layout_flags(experiment, exp_flags, true);
  add_common(experiment, exp_common);

  // export-svg
  Common svg_common;
  SvgStyle svg_style;
  std::string svg_drawing, svg_tree, svg_graph;
  auto* export_svg = app.add_subcommand("export-svg", "Render a tree drawing as SVG");
  export_svg->add_option("--drawing", svg_drawing, "Drawing file")->required();
  export_svg->add_option("--tree", svg_tree, "Tree file")->required();
  export_svg->add_option("--graph", svg_graph, "Graph file supplying node labels");
  export_svg->add_flag("--containment", svg_style.containment, "Draw containment circles");
  export_svg->add_flag("--labels", svg_style.labels, "Draw node labels");
  export_svg->add_option("--node-radius", svg_style.node_radius, "Node glyph radius")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(export_svg, svg_common);

  // serve
  Common srv_common;
  std::string srv_host = "127.0.0.1";
  int srv_port = 8080;
  std::int64_t srv_idle = 30 * 60;
  auto* serve_cmd = app.add_subcommand("serve", "Run the session server");
  serve_cmd->add_option("--host", srv_host, "Listen address")->capture_default_str();
  serve_cmd->add_option("--port", srv_port, "Port (0 picks a free one)")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  serve_cmd->add_option("--idle-timeout", srv_idle, "Seconds before an idle session expires")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  serve_cmd->add_option("--seed", srv_common.seed, "Default spring-layout seed for new sessions");
  serve_cmd->add_option("--output,-o", srv_common.output, "Write the bound port to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) {
      const Graph g = generate_random_graph(gen_nodes, gen_prob, gen_common.resolved_seed());
      emit(gen_common, graph_to_json(g).dump(2) + "\n", out);
    } else if (*layout) {
      lay_common.resolved_seed();
      const Graph g = load_graph(lay_graph);
      const RootedTree tree = bfs_spanning_tree(g, checked_node(g, lay_root, "root"));
      Drawing d;
      if (lay_flags.algorithm == "pc") {
        d = to_drawing(static_layout(std::make_shared<const RootedTree>(tree),
                                     lay_flags.animation().layout));
      } else {
        d = yee_static_layout(tree, lay_flags.yee());
      }
      if (!lay_tree_output.empty()) write_text_file(lay_tree_output, tree_to_json(tree).dump(2) + "\n");
      emit(lay_common, drawing_to_json(d).dump(2) + "\n", out);
    } else if (*animate_cmd) {
      const AnimationParams params = anim_flags.animation();
      const YeeParams yee = anim_flags.yee();
      const std::uint64_t seed = anim_common.resolved_seed();
      const Graph g = load_graph(anim_graph);
      const NodeId root = checked_node(g, anim_root, "root");
      const Drawing d_old = anim_drawing.empty()
                                ? force_directed_layout(g, kDefaultSpringIterations, seed,
                                                        SpringParams{params.layout.root_radius})
                                : drawing_from_json(read_json_file(anim_drawing), g.node_count());
      std::optional<RootedTree> old_tree;
      if (!anim_old_tree.empty()) {
        old_tree = tree_from_json(read_json_file(anim_old_tree), g.node_count());
        for (const Edge& e : old_tree->edges()) {
          if (!g.adjacent(e.a, e.b)) throw FormatError("old tree uses an edge missing from the graph");
        }
      }
      const EdgeSet old_edges = old_tree ? old_tree->edges() : g.edges();
      Timeline tl;
      if (anim_flags.algorithm == "pc") {
        tl = animate(g, d_old, root, params, old_edges);
      } else {
        const RootedTree target = order_children_by_drawing(bfs_spanning_tree(g, root), d_old);
        tl = yee_animate(d_old, target, yee, old_tree ? old_tree->parent(root) : std::nullopt,
                         old_edges);
      }
      emit(anim_common, timeline_to_jsonl(tl), out);
    } else if (*experiment) {
      std::tie(exp_cfg.order_min, exp_cfg.order_max) = parse_orders(exp_orders);
      exp_cfg.seed = exp_common.resolved_seed();
      exp_cfg.animation = exp_flags.animation();
      exp_cfg.yee = exp_flags.yee();
      try {
        exp_cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const ResultTable table = run_experiment(exp_name, exp_cfg);
      emit(exp_common, table.to_csv(), out);
      if (!exp_common.output.empty()) {
        write_text_file(exp_common.output + ".manifest.json",
                        experiment_manifest(exp_name, exp_cfg).dump(2) + "\n");
      }
    } else if (*export_svg) {
      svg_common.resolved_seed();
      const Drawing d = drawing_from_json(read_json_file(svg_drawing));
      const RootedTree tree = tree_from_json(read_json_file(svg_tree), d.size());
      if (!svg_graph.empty()) {
        const Graph g = load_graph(svg_graph);
        if (g.node_count() != d.size()) throw FormatError("graph and drawing node counts differ");
        svg_style.label_text = g.labels();
      }
      emit(svg_common, render_svg(d, tree, svg_style), out);
    } else if (*serve_cmd) {
      SessionOptions options;
      options.idle_timeout = std::chrono::seconds(srv_idle);
      options.default_seed = srv_common.resolved_seed();
      const bool ok = serve(srv_host, srv_port, options, [&](int port) {
        if (!srv_common.output.empty()) write_text_file(srv_common.output, std::to_string(port) + "\n");
        err << "listening on " << srv_host << ":" << port << std::endl;
      });
      if (!ok) {
        err << "error: cannot listen on " << srv_host << ":" << srv_port << "\n";
        return kExitData;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace radial::cli
