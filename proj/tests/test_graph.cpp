#include <algorithm>
#include <deque>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "radial/graph.hpp"
#include "support/random_trees.hpp"

using namespace radial;

namespace {

Graph path3() { return Graph::create(3, {{0, 1}, {1, 2}}); }
Graph cycle4() { return Graph::create(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// Independent reachability oracle over a plain edge list.
std::size_t reachable_from_zero(std::size_t n, const EdgeSet& edges) {
  std::vector<bool> seen(n, false);
  seen[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : edges) {
      if (seen[e.a] != seen[e.b]) {
        seen[e.a] = seen[e.b] = true;
        grew = true;
      }
    }
  }
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

// Floyd-Warshall hop distances.
std::vector<std::vector<std::size_t>> all_pairs_hops(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.a][e.b] = d[e.b][e.a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<Edge> edge_list(const EdgeSet& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(GraphCreate, RejectsSelfLoop) {
  EXPECT_THROW(Graph::create(2, {{0, 0}, {0, 1}}), GraphError);
}

TEST(GraphCreate, RejectsDuplicateEdge) {
  EXPECT_THROW(Graph::create(2, {{0, 1}, {1, 0}}), GraphError);
}

TEST(GraphCreate, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Graph::create(2, {{0, 2}}), GraphError);
}

TEST(GraphCreate, RejectsDisconnected) {
  EXPECT_THROW(Graph::create(3, {{0, 1}}), DisconnectedGraphError);
}

TEST(GraphCreate, NeighborsSortedAndLabelsKept) {
  const Graph g = Graph::create(3, {{2, 0}, {1, 0}}, {std::string("a"), std::nullopt, std::string("c")});
  EXPECT_EQ(g.neighbors(0), (std::vector<NodeId>{1, 2}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.label(0), "a");
  EXPECT_FALSE(g.label(1).has_value());
}

TEST(GenerateRandomGraph, FullProbabilityGivesK2) {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const Graph g = generate_random_graph(2, 1.0, seed);
    EXPECT_EQ(g.node_count(), 2u);
    EXPECT_EQ(edge_list(g.edges()), (std::vector<Edge>{{0, 1}}));
  }
}

TEST(GenerateRandomGraph, SingleNode) {
  const Graph g = generate_random_graph(1, 0.5, 7);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(GenerateRandomGraph, Order30IsConnectedAndPlausible) {
  const Graph g = generate_random_graph(30, 0.1, 42);
  EXPECT_EQ(reachable_from_zero(30, g.edges()), 30u);
  // 435 pairs at p = 0.1: a connected sample needs at least 29 edges, and more
  // than three times the expectation would be absurd.
  EXPECT_GE(g.edges().size(), 29u);
  EXPECT_LE(g.edges().size(), 130u);
}

TEST(GenerateRandomGraph, DeterministicPerSeed) {
  const Graph a = generate_random_graph(40, 0.1, 5);
  const Graph b = generate_random_graph(40, 0.1, 5);
  EXPECT_EQ(edge_list(a.edges()), edge_list(b.edges()));
}

TEST(GenerateRandomGraph, ConnectedAcrossOrders) {
  for (std::size_t n = 2; n <= 100; n += 7) {
    const Graph g = generate_random_graph(n, 0.1, n * 31);
    EXPECT_EQ(reachable_from_zero(n, g.edges()), n) << "n=" << n;
  }
}

TEST(GenerateRandomGraph, RetriesWithIncrementedSeed) {
  // The returned graph must equal the first connected raw sample of seed,
  // seed + 1, ...
  const std::uint64_t seed = 3;
  const Graph g = generate_random_graph(30, 0.1, seed);
  for (std::uint64_t s = seed;; ++s) {
    std::mt19937_64 rng(s);
    const EdgeSet raw(sample_gnp_edges(30, 0.1, rng));
    if (reachable_from_zero(30, raw) == 30) {
      EXPECT_EQ(edge_list(raw), edge_list(g.edges()));
      break;
    }
  }
}

TEST(GenerateRandomGraph, AttemptBoundExceeded) {
  EXPECT_THROW(generate_random_graph(5, 0.0, 1), GraphError);
}

TEST(GenerateRandomGraph, RejectsBadProbability) {
  EXPECT_THROW(generate_random_graph(5, 1.5, 1), GraphError);
  EXPECT_THROW(generate_random_graph(0, 0.5, 1), GraphError);
}

TEST(UniformIndex, StaysInRange) {
  std::mt19937_64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[uniform_index(rng, 7)];
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_THROW(uniform_index(rng, 0), std::invalid_argument);
}

TEST(BfsSpanningTree, PathIsItsOwnTree) {
  const RootedTree t = bfs_spanning_tree(path3(), 0);
  EXPECT_EQ(t.parent(1), 0u);
  EXPECT_EQ(t.parent(2), 1u);
  EXPECT_FALSE(t.parent(0).has_value());
  EXPECT_EQ(t.depth(2), 2u);
}

TEST(BfsSpanningTree, StarChildrenInAscendingOrder) {
  const Graph star = Graph::create(5, {{0, 3}, {0, 1}, {0, 4}, {0, 2}});
  const RootedTree t = bfs_spanning_tree(star, 0);
  EXPECT_EQ(t.children(0), (std::vector<NodeId>{1, 2, 3, 4}));
  for (NodeId v = 1; v <= 4; ++v) EXPECT_EQ(t.depth(v), 1u);
}

TEST(BfsSpanningTree, FourCycleEdges) {
  const RootedTree t = bfs_spanning_tree(cycle4(), 0);
  EXPECT_EQ(edge_list(t.edges()), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}}));
}

TEST(BfsSpanningTree, DepthEqualsShortestPath) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = generate_random_graph(12, 0.3, seed);
    const auto hops = all_pairs_hops(g);
    const NodeId root = static_cast<NodeId>(seed % 12);
    const RootedTree t = bfs_spanning_tree(g, root);
    for (NodeId v = 0; v < 12; ++v) EXPECT_EQ(t.depth(v), hops[root][v]);
    EXPECT_EQ(t.edges().size(), 11u);
    for (const Edge& e : t.edges()) EXPECT_TRUE(g.adjacent(e.a, e.b));
  }
}

TEST(BfsSpanningTree, InvalidRoot) {
  EXPECT_THROW(bfs_spanning_tree(path3(), 3), GraphError);
}

TEST(RerootTree, CurrentRootIsIdentity) {
  const RootedTree t = bfs_spanning_tree(cycle4(), 0);
  EXPECT_EQ(reroot_tree(t, 0), t);
}

TEST(RerootTree, PathReversal) {
  const RootedTree t = reroot_tree(bfs_spanning_tree(path3(), 0), 2);
  EXPECT_EQ(t.root(), 2u);
  EXPECT_EQ(t.parent(1), 2u);
  EXPECT_EQ(t.parent(0), 1u);
  EXPECT_EQ(t.depth(0), 2u);
}

TEST(RerootTree, EdgeSetPreserved) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + uniform_index(rng, 40);
    const Graph g = test_support::random_tree(n, rng);
    const RootedTree t = bfs_spanning_tree(g, static_cast<NodeId>(uniform_index(rng, n)));
    const NodeId r = static_cast<NodeId>(uniform_index(rng, n));
    const RootedTree u = reroot_tree(t, r);
    EXPECT_EQ(edge_list(u.edges()), edge_list(t.edges()));
    EXPECT_EQ(u.root(), r);
    EXPECT_EQ(u.depth(r), 0u);
  }
}

TEST(RerootTree, KeepsCyclicOrderAroundFlippedNodes) {
  // 0 has children 1 2 3; 2 has children 4 5. Re-root at 4.
  const RootedTree t = RootedTree::from_children(0, {{1, 2, 3}, {}, {4, 5}, {}, {}, {}});
  const RootedTree u = reroot_tree(t, 4);
  EXPECT_EQ(u.children(4), (std::vector<NodeId>{2}));
  // Around 2 the old order was parent 0, then 4, 5; from 4 it continues 5, 0.
  EXPECT_EQ(u.children(2), (std::vector<NodeId>{5, 0}));
  // Around 0 the old order was 1, 2, 3; entered from 2 it continues 3, 1.
  EXPECT_EQ(u.children(0), (std::vector<NodeId>{3, 1}));
}

TEST(RerootTree, NewRootAppendsFormerParentLast) {
  const RootedTree t = RootedTree::from_children(0, {{1}, {2, 3}, {}, {}});
  const RootedTree u = reroot_tree(t, 1);
  EXPECT_EQ(u.children(1), (std::vector<NodeId>{2, 3, 0}));
}

TEST(RerootTree, InvalidNode) {
  EXPECT_THROW(reroot_tree(bfs_spanning_tree(path3(), 0), 9), GraphError);
}

TEST(RootedTree, RejectsMalformedChildren) {
  EXPECT_THROW(RootedTree::from_children(0, {{1}, {0}}), GraphError);
  EXPECT_THROW(RootedTree::from_children(0, {{1}, {}, {}}), GraphError);
  EXPECT_THROW(RootedTree::from_children(3, {{1}, {}}), GraphError);
}

TEST(RootedTree, TopDownIsBreadthFirst) {
  const RootedTree t = bfs_spanning_tree(cycle4(), 0);
  EXPECT_EQ(t.top_down(), (std::vector<NodeId>{0, 1, 3, 2}));
  EXPECT_EQ(t.height(), 2u);
}

TEST(EdgeSet, SetOperations) {
  const EdgeSet a({{0, 1}, {1, 2}});
  const EdgeSet b({{2, 1}, {2, 3}});
  EXPECT_EQ(edge_list(a.united(b)), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(edge_list(a.minus(b)), (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(b.contains({3, 2}));
}
