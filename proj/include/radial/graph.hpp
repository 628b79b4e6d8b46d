#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace radial {

using NodeId = std::uint32_t;

/// Raised for malformed graphs or trees, bad node ids and failed generation.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a graph is well-formed but not connected.
class DisconnectedGraphError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Undirected edge stored with `a < b`.
struct Edge {
  NodeId a = 0;
  NodeId b = 0;

  Edge() = default;
  Edge(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool touches(NodeId v) const { return a == v || b == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free edge list.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  bool contains(const Edge& e) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& items() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  EdgeSet united(const EdgeSet& other) const;
  EdgeSet minus(const EdgeSet& other) const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Undirected, simple, connected graph on nodes 0..n-1.
class Graph {
 public:
  /// Validates and builds. Throws GraphError on self-loops, duplicates or
  /// out-of-range ids and DisconnectedGraphError if not connected.
  static Graph create(std::size_t node_count, const std::vector<Edge>& edges,
                      std::vector<std::optional<std::string>> labels = {});

  std::size_t node_count() const { return adjacency_.size(); }
  const EdgeSet& edges() const { return edges_; }
  /// Neighbours in ascending id order.
  const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_.at(v); }
  bool has_node(NodeId v) const { return v < adjacency_.size(); }
  bool adjacent(NodeId u, NodeId v) const;
  const std::optional<std::string>& label(NodeId v) const { return labels_.at(v); }
  const std::vector<std::optional<std::string>>& labels() const { return labels_; }

  bool operator==(const Graph&) const = default;

 private:
  Graph() = default;

  std::vector<std::vector<NodeId>> adjacency_;
  EdgeSet edges_;
  std::vector<std::optional<std::string>> labels_;
};

/// Spanning tree with ordered child lists.
class RootedTree {
 public:
  /// Builds from a root and ordered child lists; checks that every node is
  /// reached exactly once.
  static RootedTree from_children(NodeId root, std::vector<std::vector<NodeId>> children);

  NodeId root() const { return root_; }
  std::size_t node_count() const { return children_.size(); }
  bool has_node(NodeId v) const { return v < children_.size(); }
  bool is_root(NodeId v) const { return v == root_; }
  /// Parent of a non-root node; nullopt for the root.
  std::optional<NodeId> parent(NodeId v) const;
  const std::vector<NodeId>& children(NodeId v) const { return children_.at(v); }
  std::size_t depth(NodeId v) const { return depth_.at(v); }
  std::size_t height() const;
  /// Nodes in breadth-first order starting at the root; parents precede children.
  const std::vector<NodeId>& top_down() const { return order_; }
  EdgeSet edges() const;

  bool operator==(const RootedTree& other) const {
    return root_ == other.root_ && children_ == other.children_;
  }

 private:
  RootedTree() = default;

  static constexpr NodeId kNoParent = static_cast<NodeId>(-1);

  NodeId root_ = 0;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::size_t> depth_;
  std::vector<NodeId> order_;
};

constexpr int kMaxGenerationAttempts = 10000;

/// G(n, p) sample using `rng`; may be disconnected. Pairs (i, j), i < j, are
/// visited in lexicographic order with one uniform draw each.
std::vector<Edge> sample_gnp_edges(std::size_t n, double p_edge, std::mt19937_64& rng);

/// Connected G(n, p) sample. A disconnected draw is retried with seed+1, up to
/// kMaxGenerationAttempts times. If `rng_out` is given it receives the engine
/// state right after the successful draw, so callers can keep drawing from the
/// same stream.
Graph generate_random_graph(std::size_t n, double p_edge, std::uint64_t seed,
                            std::mt19937_64* rng_out = nullptr);

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
double unit_uniform(std::mt19937_64& rng);

/// Uniform integer in [0, n) by rejection sampling; n > 0.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);

/// BFS tree; neighbours visited in ascending id order.
RootedTree bfs_spanning_tree(const Graph& g, NodeId root);

/// Same undirected tree hung from `new_root`. Nodes off the new-root to
/// old-root path keep their child lists. The new root keeps its children and
/// gets its former parent appended last. Every other flipped node, whose
/// former child c became its parent, lists its children as: old children after
/// c, former parent, old children before c. This keeps the cyclic order of
/// each node's neighbours.
RootedTree reroot_tree(const RootedTree& t, NodeId new_root);

}  // namespace radial
