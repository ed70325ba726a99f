#include "cyclespan/graph.hpp"

#include <algorithm>
#include <string>

#include "cyclespan/error.hpp"

namespace cyclespan {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw Error(ErrorCode::VertexOutOfRange, "edge " + std::to_string(i) + " (" +
                                                   std::to_string(e.u) + "," + std::to_string(e.v) +
                                                   ") with " + std::to_string(vertex_count_) +
                                                   " vertices");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(i) + " at vertex " +
                                           std::to_string(e.u));
    }
    keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (auto it = std::adjacent_find(keys.begin(), keys.end()); it != keys.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "(" + std::to_string(it->first) + "," + std::to_string(it->second) + ")");
  }

  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  incidences_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    incidences_[fill[e.u]++] = {e.v, static_cast<EdgeId>(i)};
    incidences_[fill[e.v]++] = {e.u, static_cast<EdgeId>(i)};
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const noexcept {
  if (u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
  for (const Incidence& inc : incident(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

EdgeSet Graph::full_set() const {
  EdgeSet s(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) s.set(e);
  return s;
}

Graph build_graph(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || v < 0) {
      throw Error(ErrorCode::VertexOutOfRange, "negative vertex id");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return Graph(vertex_count, std::move(edges));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(u)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

bool is_biconnected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;

  // Iterative Hopcroft-Tarjan articulation-point search from vertex 0.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0);
  std::vector<EdgeId> parent_edge(n, 0);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;
  std::size_t root_children = 0;

  disc[0] = low[0] = timer++;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      const Incidence& i = inc[f.next++];
      if (f.v != 0 && i.edge == parent_edge[f.v]) continue;
      if (disc[i.neighbor] == kUnvisited) {
        disc[i.neighbor] = low[i.neighbor] = timer++;
        parent_edge[i.neighbor] = i.edge;
        if (f.v == 0) ++root_children;
        stack.push_back({i.neighbor, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[i.neighbor]);
      }
      continue;
    }
    VertexId child = f.v;
    stack.pop_back();
    if (stack.empty()) break;
    VertexId parent = stack.back().v;
    low[parent] = std::min(low[parent], low[child]);
    if (parent != 0 && low[child] >= disc[parent]) return false;
  }
  return root_children <= 1;
}

std::vector<VertexId> touched_vertices(const Graph& g, const EdgeSet& s) {
  std::vector<char> mark(g.vertex_count(), 0);
  s.for_each([&](EdgeId e) {
    mark[g.edge(e).u] = 1;
    mark[g.edge(e).v] = 1;
  });
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

}  // namespace cyclespan
