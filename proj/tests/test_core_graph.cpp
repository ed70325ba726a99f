#include <doctest.h>

#include <random>

#include "cyclespan/cycles.hpp"
#include "cyclespan/error.hpp"
#include "cyclespan/graph.hpp"
#include "cyclespan/plane.hpp"
#include "oracles.hpp"

using namespace cyclespan;

namespace {

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Graph k4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("build_graph keeps input order and rejects bad edges") {
  Graph t = triangle();
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.edge(1) == Edge{1, 2});
  CHECK(t.find_edge(0, 2) == EdgeId{2});
  CHECK_FALSE(t.find_edge(0, 0).has_value());

  CHECK(octahedron().graph().edge_count() == 12);

  CHECK(code_of([] { build_graph(2, {{0, 1}, {0, 1}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { build_graph(2, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { build_graph(2, {{1, 1}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { build_graph(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { build_graph(2, {{-1, 0}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(triangle()));
  CHECK(is_connected(build_graph(0, {})));
  CHECK(is_connected(build_graph(1, {})));
  CHECK_FALSE(is_connected(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK(is_connected(octahedron().graph()));
}

TEST_CASE("is_biconnected") {
  CHECK_FALSE(is_biconnected(build_graph(3, {{0, 1}, {1, 2}})));
  CHECK(is_biconnected(triangle()));
  CHECK(is_biconnected(octahedron().graph()));
  CHECK(is_biconnected(layered_octahedron(1).plane.graph()));
  // Two triangles sharing vertex 2.
  CHECK_FALSE(is_biconnected(build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})));
  CHECK_FALSE(is_biconnected(build_graph(2, {{0, 1}})));
}

TEST_CASE("is_biconnected agrees with vertex-deletion oracle on random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 7);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    Graph g(n, edges);
    CHECK(is_biconnected(g) == oracle::brute_biconnected(g));
  }
}

TEST_CASE("symmetric difference") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}});
  EdgeSet a = g.make_set({0, 1, 2});
  EdgeSet b = g.make_set({1, 3, 4});
  CHECK(symmetric_difference(a, a).empty());
  CHECK(symmetric_difference(a, g.empty_set()) == a);
  EdgeSet square = symmetric_difference(a, b);
  CHECK(square == g.make_set({0, 2, 3, 4}));
  CHECK(is_cycle(g, square));

  CHECK(code_of([&] { (void)symmetric_difference(a, EdgeSet(7)); }) == ErrorCode::CapacityMismatch);
  CHECK(code_of([] { EdgeSet too_big(EdgeSet::kMaxCapacity + 1); }) == ErrorCode::CapacityExceeded);
}

TEST_CASE("GF(2) group laws on random sets") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t cap = 1 + rng() % EdgeSet::kMaxCapacity;
    EdgeSet a = oracle::random_edge_set(rng, cap);
    EdgeSet b = oracle::random_edge_set(rng, cap);
    EdgeSet c = oracle::random_edge_set(rng, cap);
    CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
    CHECK((a ^ b) == (b ^ a));
    CHECK((a ^ a).empty());
    CHECK((a ^ b).count() == a.count() + b.count() - 2 * (a & b).count());
    CHECK((a & b).is_subset_of(a));
  }
}

TEST_CASE("EdgeSet ids, order and widening") {
  EdgeSet s(100, {0, 63, 64, 99});
  CHECK(s.ids() == std::vector<EdgeId>{0, 63, 64, 99});
  CHECK(s.count() == 4);
  CHECK(EdgeSet(100, {64}) > EdgeSet(100, {0, 1, 2, 63}));
  CHECK(EdgeSet(10, {3}) < EdgeSet(10, {0, 1, 2, 3}));
  EdgeSet w = EdgeSet(12, {1, 5}).widened(21);
  CHECK(w.capacity() == 21);
  CHECK(w.ids() == std::vector<EdgeId>{1, 5});
}

TEST_CASE("is_cycle") {
  Graph t = triangle();
  CHECK(is_cycle(t, t.full_set()));
  CHECK_FALSE(is_cycle(t, t.empty_set()));
  CHECK_FALSE(is_cycle(t, t.make_set({0, 1})));

  Graph two = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_cycle(two, two.full_set()));
  CHECK(is_cycle(two, two.make_set({3, 4, 5})));

  // Figure-eight: every degree even but vertex 2 has degree 4.
  Graph eight = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK_FALSE(is_cycle(eight, eight.full_set()));
}

TEST_CASE("is_cycle agrees with the explicit oracle on all subsets of K4 and the octahedron") {
  for (const Graph& g : {k4(), octahedron().graph()}) {
    const std::size_t m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<EdgeId> ids;
      for (EdgeId e = 0; e < m; ++e)
        if ((mask >> e) & 1U) ids.push_back(e);
      const bool got = is_cycle(g, g.make_set(ids));
      CHECK(got == oracle::brute_is_cycle(g, ids));
      if (got) CHECK(ids.size() >= 3);
    }
  }
}

TEST_CASE("enumerate_cycles") {
  CHECK(enumerate_cycles(triangle()).size() == 1);
  CHECK(enumerate_cycles(k4()).size() == 7);
  // Frozen from the 2^12 subset filter.
  CHECK(enumerate_cycles(octahedron().graph()).size() == 63);
  CHECK(enumerate_cycles(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})).empty());

  const auto cycles = enumerate_cycles(k4());
  CHECK(std::is_sorted(cycles.begin(), cycles.end()));

  CHECK(code_of([] { enumerate_cycles(k4(), 6); }) == ErrorCode::CycleLimitExceeded);
}

TEST_CASE("enumerate_cycles equals the subset filter on random graphs with m <= 14") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = 3 + rng() % 5;
    Graph g = oracle::random_connected_graph(rng, n, 0.6);
    if (g.edge_count() > 14) continue;
    CHECK(enumerate_cycles(g) == oracle::subset_filter_cycles(g));
    ++checked;
  }
  CHECK(enumerate_cycles(octahedron().graph()) == oracle::subset_filter_cycles(octahedron().graph()));
}

TEST_CASE("gf2_rank") {
  Graph g = k4();
  std::vector<EdgeSet> sets = {g.make_set({0, 1, 3}), g.make_set({1, 2, 5}), g.make_set({0, 2, 4}),
                               g.make_set({3, 4, 5})};
  // The four triangles of K4 sum to zero: rank 3 = m - n + 1.
  CHECK(gf2_rank(sets) == 3);
  CHECK(gf2_rank(std::vector<EdgeSet>{}) == 0);
}
