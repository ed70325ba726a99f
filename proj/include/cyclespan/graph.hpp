#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclespan/edge_set.hpp"

namespace cyclespan {

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Simple undirected graph. Edge ids are positions in the construction list and
// never change. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws SelfLoop, VertexOutOfRange or DuplicateEdge.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Incidence> incident(VertexId v) const noexcept {
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const noexcept;

  // Edge sets sized for this graph.
  EdgeSet empty_set() const { return EdgeSet(edge_count()); }
  EdgeSet full_set() const;
  EdgeSet make_set(std::span<const EdgeId> ids) const { return EdgeSet(edge_count(), ids); }
  EdgeSet make_set(std::initializer_list<EdgeId> ids) const { return EdgeSet(edge_count(), ids); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

Graph build_graph(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edge_list);

// Every vertex reachable from vertex 0; vacuously true for <= 1 vertex.
bool is_connected(const Graph& g);

// Connected, at least 3 vertices, no cut vertex.
bool is_biconnected(const Graph& g);

// Vertices incident to at least one edge of s, ascending.
std::vector<VertexId> touched_vertices(const Graph& g, const EdgeSet& s);

}  // namespace cyclespan
