#include "radial/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace radial {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  std::vector<Edge> out;
  out.reserve(edges_.size() + other.edges_.size());
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                 std::back_inserter(out));
  EdgeSet r;
  r.edges_ = std::move(out);
  return r;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
  std::vector<Edge> out;
  std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                      std::back_inserter(out));
  EdgeSet r;
  r.edges_ = std::move(out);
  return r;
}

namespace {

bool is_connected(const std::vector<std::vector<NodeId>>& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adjacency.size();
}

std::vector<std::vector<NodeId>> build_adjacency(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<NodeId>> adjacency(n);
  for (const Edge& e : edges) {
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return adjacency;
}

}  // namespace

Graph Graph::create(std::size_t node_count, const std::vector<Edge>& edges,
                    std::vector<std::optional<std::string>> labels) {
  if (node_count == 0) throw GraphError("graph must have at least one node");
  if (node_count > std::numeric_limits<NodeId>::max() / 2) throw GraphError("graph too large");
  if (!labels.empty() && labels.size() != node_count)
    throw GraphError("label count does not match node count");
  for (const Edge& e : edges) {
    if (e.a == e.b) throw GraphError("self-loop at node " + std::to_string(e.a));
    if (e.b >= node_count)
      throw GraphError("edge endpoint " + std::to_string(e.b) + " out of range");
  }
  EdgeSet set(edges);
  if (set.size() != edges.size()) throw GraphError("duplicate edge");

  Graph g;
  g.adjacency_ = build_adjacency(node_count, set.items());
  if (!is_connected(g.adjacency_)) throw DisconnectedGraphError("graph is not connected");
  g.edges_ = std::move(set);
  g.labels_ = labels.empty() ? std::vector<std::optional<std::string>>(node_count)
                             : std::move(labels);
  return g;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

RootedTree RootedTree::from_children(NodeId root, std::vector<std::vector<NodeId>> children) {
  const std::size_t n = children.size();
  if (root >= n) throw GraphError("tree root " + std::to_string(root) + " out of range");

  RootedTree t;
  t.root_ = root;
  t.parent_.assign(n, kNoParent);
  t.depth_.assign(n, 0);
  t.order_.reserve(n);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  t.order_.push_back(root);
  for (std::size_t head = 0; head < t.order_.size(); ++head) {
    NodeId v = t.order_[head];
    for (NodeId c : children[v]) {
      if (c >= n) throw GraphError("tree child " + std::to_string(c) + " out of range");
      if (seen[c]) throw GraphError("node " + std::to_string(c) + " reached twice in tree");
      seen[c] = true;
      t.parent_[c] = v;
      t.depth_[c] = t.depth_[v] + 1;
      t.order_.push_back(c);
    }
  }
  if (t.order_.size() != n) throw GraphError("tree does not span all nodes");
  t.children_ = std::move(children);
  return t;
}

std::optional<NodeId> RootedTree::parent(NodeId v) const {
  NodeId p = parent_.at(v);
  if (p == kNoParent) return std::nullopt;
  return p;
}

std::size_t RootedTree::height() const {
  return depth_.empty() ? 0 : *std::max_element(depth_.begin(), depth_.end());
}

EdgeSet RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(node_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    if (parent_[v] != kNoParent) out.emplace_back(v, parent_[v]);
  }
  return EdgeSet(std::move(out));
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::vector<Edge> sample_gnp_edges(std::size_t n, double p_edge, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit_uniform(rng) < p_edge) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  return edges;
}

Graph generate_random_graph(std::size_t n, double p_edge, std::uint64_t seed,
                            std::mt19937_64* rng_out) {
  if (n < 1) throw GraphError("random graph needs at least one node");
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) throw GraphError("edge probability must be in [0, 1]");
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<Edge> edges = sample_gnp_edges(n, p_edge, rng);
    if (!is_connected(build_adjacency(n, edges))) continue;
    if (rng_out != nullptr) *rng_out = rng;
    return Graph::create(n, edges);
  }
  throw GraphError("no connected G(" + std::to_string(n) + ", " + std::to_string(p_edge) +
                   ") sample within " + std::to_string(kMaxGenerationAttempts) +
                   " attempts; edge probability too small");
}

RootedTree bfs_spanning_tree(const Graph& g, NodeId root) {
  if (!g.has_node(root)) throw GraphError("invalid root " + std::to_string(root));
  const std::size_t n = g.node_count();
  std::vector<std::vector<NodeId>> children(n);
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      children[v].push_back(w);
      queue.push_back(w);
    }
  }
  return RootedTree::from_children(root, std::move(children));
}

RootedTree reroot_tree(const RootedTree& t, NodeId new_root) {
  if (!t.has_node(new_root)) throw GraphError("invalid node " + std::to_string(new_root));
  std::vector<std::vector<NodeId>> children(t.node_count());
  for (NodeId v = 0; v < t.node_count(); ++v) children[v] = t.children(v);

  // Walk from the new root up to the old root, flipping each edge. A flipped
  // node lists the old children after its new parent, then its former parent,
  // then the old children before the new parent: the counter-clockwise order
  // seen from the new parent in a parent-centred drawing.
  std::optional<NodeId> below;
  NodeId v = new_root;
  while (true) {
    const auto& old_kids = t.children(v);
    std::vector<NodeId> kids;
    kids.reserve(old_kids.size() + 1);
    auto p = t.parent(v);
    if (below) {
      auto split = std::find(old_kids.begin(), old_kids.end(), *below);
      kids.insert(kids.end(), split + 1, old_kids.end());
      if (p) kids.push_back(*p);
      kids.insert(kids.end(), old_kids.begin(), split);
    } else {
      kids = old_kids;
      if (p) kids.push_back(*p);
    }
    children[v] = std::move(kids);
    if (!p) break;
    below = v;
    v = *p;
  }
  return RootedTree::from_children(new_root, std::move(children));
}

}  // namespace radial
