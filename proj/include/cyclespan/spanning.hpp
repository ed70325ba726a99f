#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclespan/edge_set.hpp"
#include "cyclespan/graph.hpp"

namespace cyclespan {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultTreeLimit = 10'000'000;

// Edge set of a spanning tree: n-1 edges, acyclic, touching every vertex.
class SpanningTree {
 public:
  SpanningTree() = default;

  // Validating constructor; throws NotASpanningTree.
  static SpanningTree from_edges(const Graph& g, const EdgeSet& edges);
  // For callers that already know the invariant holds (the enumerator, exchange steps
  // whose result is checked elsewhere).
  static SpanningTree unchecked(const EdgeSet& edges) { return SpanningTree(edges); }

  const EdgeSet& edges() const noexcept { return edges_; }
  bool contains(EdgeId e) const noexcept { return edges_.test(e); }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend std::strong_ordering operator<=>(const SpanningTree& a, const SpanningTree& b) noexcept {
    return a.edges_ <=> b.edges_;
  }

 private:
  explicit SpanningTree(const EdgeSet& edges) : edges_(edges) {}

  EdgeSet edges_;
};

bool is_spanning_tree(const Graph& g, const EdgeSet& s);

// All spanning trees, each once, in canonical order. Contraction/deletion
// recursion: bridges of the current contracted multigraph are forced into
// every tree, so every branch yields at least one tree.
// Throws Disconnected or TreeLimitExceeded.
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g,
                                                   std::size_t limit = kDefaultTreeLimit);

// Kirchhoff count: determinant of the Laplacian with row/column 0 removed,
// by fraction-free Bareiss elimination. Throws Disconnected.
BigInt count_spanning_trees(const Graph& g);

// Rooted view of one spanning tree answering tree-path queries. Built once per
// tree and reused for all of its non-tree edges.
class TreePaths {
 public:
  TreePaths(const Graph& g, const EdgeSet& tree);

  // Edges of the unique tree path between u and v.
  EdgeSet path(VertexId u, VertexId v) const;

  // {e} plus the tree path between e's endpoints; e must be a non-tree edge.
  EdgeSet fundamental_cycle(EdgeId e) const;

 private:
  const Graph* g_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::size_t> depth_;
};

// One cycle per non-tree edge, in ascending non-tree edge id order.
// Throws NotASpanningTree.
std::vector<EdgeSet> fundamental_cycles(const Graph& g, const SpanningTree& t);

}  // namespace cyclespan
