#include "cyclespan/cycles.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cyclespan/error.hpp"

namespace cyclespan {

namespace {

constexpr std::size_t kSmallGraph = 256;

template <class Degrees>
bool is_cycle_impl(const Graph& g, const EdgeSet& s, Degrees& deg) {
  bool ok = true;
  s.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (++deg[ed.u] > 2 || ++deg[ed.v] > 2) ok = false;
  });
  if (!ok) return false;
  std::size_t first_edge = 0;
  bool found = false;
  s.for_each([&](EdgeId e) {
    if (!found) {
      first_edge = e;
      found = true;
    }
    if (deg[g.edge(e).u] != 2 || deg[g.edge(e).v] != 2) ok = false;
  });
  if (!ok) return false;

  // Walk around the component containing first_edge and check it uses every edge.
  const Edge& start = g.edge(static_cast<EdgeId>(first_edge));
  VertexId cur = start.v;
  EdgeId via = static_cast<EdgeId>(first_edge);
  std::size_t walked = 1;
  while (cur != start.u) {
    bool advanced = false;
    for (const Incidence& inc : g.incident(cur)) {
      if (inc.edge != via && s.test(inc.edge)) {
        cur = inc.neighbor;
        via = inc.edge;
        advanced = true;
        break;
      }
    }
    if (!advanced) return false;
    ++walked;
  }
  return walked == s.count();
}

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, std::size_t limit)
      : g_(g), limit_(limit), on_path_(g.vertex_count(), 0), path_set_(g.edge_count()) {}

  std::vector<EdgeSet> run() {
    for (VertexId s = 0; s < g_.vertex_count(); ++s) {
      root_ = s;
      path_.assign(1, s);
      on_path_[s] = 1;
      extend(s);
      on_path_[s] = 0;
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Paths start at the smallest vertex of the cycle; each cycle is closed in
  // two directions, so keep the one whose second vertex is below its last.
  void extend(VertexId u) {
    for (const Incidence& inc : g_.incident(u)) {
      VertexId w = inc.neighbor;
      if (w == root_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) {
          EdgeSet c = path_set_;
          c.set(inc.edge);
          if (out_.size() >= limit_) {
            throw Error(ErrorCode::CycleLimitExceeded,
                        "more than " + std::to_string(limit_) + " cycles");
          }
          out_.push_back(c);
        }
        continue;
      }
      if (w < root_ || on_path_[w]) continue;
      on_path_[w] = 1;
      path_.push_back(w);
      path_set_.set(inc.edge);
      extend(w);
      path_set_.reset(inc.edge);
      path_.pop_back();
      on_path_[w] = 0;
    }
  }

  const Graph& g_;
  std::size_t limit_;
  VertexId root_ = 0;
  std::vector<char> on_path_;
  std::vector<VertexId> path_;
  EdgeSet path_set_;
  std::vector<EdgeSet> out_;
};

}  // namespace

bool is_cycle(const Graph& g, const EdgeSet& s) {
  if (s.empty() || s.capacity() != g.edge_count()) return false;
  if (g.vertex_count() <= kSmallGraph) {
    std::array<unsigned char, kSmallGraph> deg{};
    return is_cycle_impl(g, s, deg);
  }
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  return is_cycle_impl(g, s, deg);
}

std::vector<EdgeSet> enumerate_cycles(const Graph& g, std::size_t limit) {
  if (g.edge_count() > EdgeSet::kMaxCapacity) {
    throw Error(ErrorCode::CapacityExceeded, "graph has too many edges for edge sets");
  }
  return CycleEnumerator(g, limit).run();
}

std::size_t gf2_rank(std::span<const EdgeSet> sets) {
  std::vector<EdgeSet> rows(sets.begin(), sets.end());
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cap = rows.front().capacity();
  for (EdgeId bit = 0; bit < cap && rank < rows.size(); ++bit) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].test(bit)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cyclespan
