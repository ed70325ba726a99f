#include "cyclespan/spanning.hpp"

#include <algorithm>
#include <string>

#include "cyclespan/error.hpp"
#include "cyclespan/union_find.hpp"

namespace cyclespan {

namespace {

using Dsu = UnionFind<std::size_t>;

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, std::size_t limit)
      : g_(g),
        limit_(limit),
        dsu_(g.vertex_count()),
        label_(g.vertex_count()),
        offsets_(g.vertex_count() + 1),
        adj_(2 * g.edge_count()),
        disc_(g.vertex_count()),
        low_(g.vertex_count()),
        bridge_(g.edge_count()) {}

  std::vector<SpanningTree> run() {
    recurse(g_.empty_set(), g_.empty_set());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  struct Arc {
    std::size_t to;
    EdgeId edge;
  };

  void recurse(EdgeSet in, EdgeSet out) {
    // Super-vertices = components of the contracted edges.
    dsu_.reset();
    in.for_each([&](EdgeId e) { dsu_.unite(g_.edge(e).u, g_.edge(e).v); });
    std::size_t k = 0;
    std::fill(label_.begin(), label_.end(), kNone);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      std::size_t r = dsu_.find(v);
      if (label_[r] == kNone) label_[r] = k++;
    }
    if (k <= 1) {
      emit(in);
      return;
    }

    // Live edges: undecided and not loops of the contracted multigraph.
    live_.clear();
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (in.test(e) || out.test(e)) continue;
      std::size_t a = label_[dsu_.find(g_.edge(e).u)];
      std::size_t b = label_[dsu_.find(g_.edge(e).v)];
      if (a != b) live_.push_back({a, b, e});
    }

    mark_bridges(k);
    for (const auto& le : live_) {
      if (bridge_[le.edge]) in.set(le.edge);
    }
    if (in.count() + 1 == g_.vertex_count()) {
      emit(in);
      return;
    }
    // Contracting bridges creates no loops, so non-bridge live edges stay live.
    EdgeId pick = 0;
    bool found = false;
    for (const auto& le : live_) {
      if (!bridge_[le.edge]) {
        pick = le.edge;
        found = true;
        break;
      }
    }
    if (!found) {
      // Only reachable for a disconnected input, which run() rules out.
      return;
    }
    EdgeSet with = in;
    with.set(pick);
    recurse(with, out);
    out.set(pick);
    recurse(in, out);
  }

  // Bridges of the multigraph on k super-vertices with the live edges. Parallel
  // edges are never bridges because the DFS skips only the tree edge's own id.
  void mark_bridges(std::size_t k) {
    std::fill(offsets_.begin(), offsets_.begin() + static_cast<std::ptrdiff_t>(k) + 1, 0);
    for (const auto& le : live_) {
      ++offsets_[le.a + 1];
      ++offsets_[le.b + 1];
      bridge_[le.edge] = 0;
    }
    for (std::size_t i = 0; i < k; ++i) offsets_[i + 1] += offsets_[i];
    fill_.assign(offsets_.begin(), offsets_.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto& le : live_) {
      adj_[fill_[le.a]++] = {le.b, le.edge};
      adj_[fill_[le.b]++] = {le.a, le.edge};
    }

    std::fill(disc_.begin(), disc_.begin() + static_cast<std::ptrdiff_t>(k), kNone);
    std::size_t timer = 0;
    frames_.clear();
    disc_[0] = low_[0] = timer++;
    frames_.push_back({0, offsets_[0], kNoEdge});
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      if (f.next < offsets_[f.v + 1]) {
        const Arc& arc = adj_[f.next++];
        if (arc.edge == f.via) continue;
        if (disc_[arc.to] == kNone) {
          disc_[arc.to] = low_[arc.to] = timer++;
          frames_.push_back({arc.to, offsets_[arc.to], arc.edge});
        } else {
          low_[f.v] = std::min(low_[f.v], disc_[arc.to]);
        }
        continue;
      }
      Frame done = f;
      frames_.pop_back();
      if (frames_.empty()) break;
      Frame& parent = frames_.back();
      low_[parent.v] = std::min(low_[parent.v], low_[done.v]);
      if (low_[done.v] > disc_[parent.v]) bridge_[done.via] = 1;
    }
  }

  void emit(const EdgeSet& tree) {
    if (out_.size() >= limit_) {
      throw Error(ErrorCode::TreeLimitExceeded,
                  "more than " + std::to_string(limit_) + " spanning trees");
    }
    out_.push_back(SpanningTree::unchecked(tree));
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

  struct LiveEdge {
    std::size_t a;
    std::size_t b;
    EdgeId edge;
  };
  struct Frame {
    std::size_t v;
    std::size_t next;
    EdgeId via;
  };

  const Graph& g_;
  std::size_t limit_;
  Dsu dsu_;
  std::vector<std::size_t> label_;
  std::vector<LiveEdge> live_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> fill_;
  std::vector<Arc> adj_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> low_;
  std::vector<char> bridge_;
  std::vector<Frame> frames_;
  std::vector<SpanningTree> out_;
};

}  // namespace

bool is_spanning_tree(const Graph& g, const EdgeSet& s) {
  if (s.capacity() != g.edge_count()) return false;
  if (g.vertex_count() == 0) return s.empty();
  if (s.count() + 1 != g.vertex_count()) return false;
  Dsu dsu(g.vertex_count());
  bool acyclic = true;
  s.for_each([&](EdgeId e) {
    if (!dsu.unite(g.edge(e).u, g.edge(e).v)) acyclic = false;
  });
  // n-1 edges without a cycle connect all n vertices.
  return acyclic;
}

SpanningTree SpanningTree::from_edges(const Graph& g, const EdgeSet& edges) {
  if (!is_spanning_tree(g, edges)) {
    throw Error(ErrorCode::NotASpanningTree, "edge set is not a spanning tree");
  }
  return SpanningTree(edges);
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::size_t limit) {
  if (g.edge_count() > EdgeSet::kMaxCapacity) {
    throw Error(ErrorCode::CapacityExceeded, "graph has too many edges for edge sets");
  }
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  if (g.vertex_count() <= 1) {
    if (limit == 0) throw Error(ErrorCode::TreeLimitExceeded, "limit 0");
    return {SpanningTree::unchecked(g.empty_set())};
  }
  return TreeEnumerator(g, limit).run();
}

BigInt count_spanning_trees(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  const std::size_t d = n - 1;
  std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d, 0));
  for (const Edge& e : g.edges()) {
    // Reduced Laplacian: vertex 0 removed, vertex v > 0 maps to row v-1.
    if (e.u > 0) a[e.u - 1][e.u - 1] += 1;
    if (e.v > 0) a[e.v - 1][e.v - 1] += 1;
    if (e.u > 0 && e.v > 0) {
      a[e.u - 1][e.v - 1] -= 1;
      a[e.v - 1][e.u - 1] -= 1;
    }
  }

  // Bareiss: every intermediate division is exact.
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < d && a[p][k] == 0) ++p;
      if (p == d) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[d - 1][d - 1];
}

TreePaths::TreePaths(const Graph& g, const EdgeSet& tree)
    : g_(&g),
      parent_(g.vertex_count(), 0),
      parent_edge_(g.vertex_count(), 0),
      depth_(g.vertex_count(), 0) {
  if (g.vertex_count() == 0) return;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(u)) {
      if (!tree.test(inc.edge) || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      parent_[inc.neighbor] = u;
      parent_edge_[inc.neighbor] = inc.edge;
      depth_[inc.neighbor] = depth_[u] + 1;
      stack.push_back(inc.neighbor);
    }
  }
}

EdgeSet TreePaths::path(VertexId u, VertexId v) const {
  EdgeSet out = g_->empty_set();
  while (depth_[u] > depth_[v]) {
    out.set(parent_edge_[u]);
    u = parent_[u];
  }
  while (depth_[v] > depth_[u]) {
    out.set(parent_edge_[v]);
    v = parent_[v];
  }
  while (u != v) {
    out.set(parent_edge_[u]);
    out.set(parent_edge_[v]);
    u = parent_[u];
    v = parent_[v];
  }
  return out;
}

EdgeSet TreePaths::fundamental_cycle(EdgeId e) const {
  const Edge& ed = g_->edge(e);
  EdgeSet c = path(ed.u, ed.v);
  c.set(e);
  return c;
}

std::vector<EdgeSet> fundamental_cycles(const Graph& g, const SpanningTree& t) {
  if (!is_spanning_tree(g, t.edges())) {
    throw Error(ErrorCode::NotASpanningTree, "edge set is not a spanning tree");
  }
  TreePaths paths(g, t.edges());
  std::vector<EdgeSet> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!t.contains(e)) out.push_back(paths.fundamental_cycle(e));
  }
  return out;
}

}  // namespace cyclespan
