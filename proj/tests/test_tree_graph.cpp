#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyclespan/counterexample.hpp"
#include "cyclespan/cycles.hpp"
#include "cyclespan/error.hpp"
#include "cyclespan/plane.hpp"
#include "cyclespan/spanning.hpp"
#include "cyclespan/tree_graph.hpp"
#include "oracles.hpp"

using namespace cyclespan;

namespace {

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

std::vector<EdgeSet> tree_sets(const std::vector<SpanningTree>& trees) {
  std::vector<EdgeSet> out;
  for (const auto& t : trees) out.push_back(t.edges());
  return out;
}

std::vector<EdgeSet> random_family(std::mt19937_64& rng, const std::vector<EdgeSet>& cycles) {
  std::uniform_int_distribution<int> keep_pct(0, 100);
  const int pct = keep_pct(rng);
  std::vector<EdgeSet> out;
  for (const auto& c : cycles) {
    if (keep_pct(rng) < pct) out.push_back(c);
  }
  return out;
}

// Same partition of tree ids (labels are already first-seen normalised).
void check_against_oracle(const Graph& g, const std::vector<SpanningTree>& trees, const TreeGraphAdjacency& tg,
                          const std::vector<EdgeSet>* family) {
  const auto adj = oracle::brute_tree_graph(g, tree_sets(trees), family);
  REQUIRE(tg.tree_count() == adj.size());
  std::size_t edges = 0;
  for (TreeId t = 0; t < adj.size(); ++t) {
    auto got = std::vector<std::size_t>(tg.neighbors(t).begin(), tg.neighbors(t).end());
    std::sort(got.begin(), got.end());
    CHECK(got == adj[t]);
    edges += adj[t].size();
  }
  CHECK(tg.edge_count() * 2 == edges);
  const auto labels = oracle::brute_components(adj);
  for (TreeId t = 0; t < adj.size(); ++t) CHECK(tg.component_labels()[t] == labels[t]);
}

}  // namespace

TEST_CASE("triangle tree graphs") {
  const Graph g = triangle();
  const auto trees = enumerate_spanning_trees(g);

  const auto all = build_tree_graph(g, trees, kAllCycles);
  CHECK(all.tree_count() == 3);
  CHECK(all.edge_count() == 3);
  CHECK(all.component_count() == 1);
  CHECK(all.is_connected());
  for (TreeId t = 0; t < 3; ++t) CHECK(all.degree(t) == 2);

  const CycleFamily empty(g, {});
  const auto none = build_tree_graph(g, trees, empty);
  CHECK(none.component_count() == 3);
  CHECK(none.isolated_count() == 3);
  const auto summary = components_summary(none);
  REQUIRE(summary.size() == 3);
  for (TreeId t = 0; t < 3; ++t) CHECK(summary[t] == ComponentSummary{1, t});

  const CycleFamily whole(g, {g.full_set()});
  CHECK(is_arboreal(g, trees, whole).arboreal);
  CHECK(build_tree_graph(g, trees, whole).is_connected());
  const auto arb = is_arboreal(g, trees, empty);
  CHECK_FALSE(arb.arboreal);
  CHECK(arb.violating_tree == TreeId{0});
}

TEST_CASE("CycleFamily validation") {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const EdgeSet square = g.make_set({0, 1, 2, 3});
  const EdgeSet tri = g.make_set({0, 1, 4});
  const CycleFamily f(g, {square, tri});
  CHECK(f.size() == 2);
  CHECK(f.index_of(tri) == std::size_t{1});
  CHECK(f.contains(g.make_set({2, 3, 4}) ^ tri));
  CHECK_FALSE(f.contains(g.make_set({2, 3, 4})));

  auto expect = [&](std::vector<EdgeSet> members, ErrorCode code) {
    try {
      CycleFamily bad(g, std::move(members));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect({g.make_set({0, 1})}, ErrorCode::FamilyNotCycles);
  expect({square, square}, ErrorCode::FamilyNotCycles);
  expect({square ^ tri ^ tri ^ square}, ErrorCode::FamilyNotCycles);
}

TEST_CASE("tree graph adjacency matches the pairwise definition") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 3 + iter % 4;
    const Graph g = oracle::random_connected_graph(rng, n, 0.6);
    const auto trees = enumerate_spanning_trees(g);
    const auto cycles = enumerate_cycles(g);
    check_against_oracle(g, trees, build_tree_graph(g, trees, kAllCycles), nullptr);
    const auto fam = random_family(rng, cycles);
    check_against_oracle(g, trees, build_tree_graph(g, trees, CycleFamily(g, fam)), &fam);
  }
  // The octahedron with its counterexample family.
  const PlaneGraph oct = octahedron();
  const auto trees = enumerate_spanning_trees(oct.graph());
  const CycleFamily family = build_cycle_family(oct, 3, 1);
  const std::vector<EdgeSet> fam(family.cycles().begin(), family.cycles().end());
  check_against_oracle(oct.graph(), trees, build_tree_graph(oct.graph(), trees, family), &fam);
}

TEST_CASE("components without adjacency lists agree") {
  const PlaneGraph oct = octahedron();
  const auto trees = enumerate_spanning_trees(oct.graph());
  const CycleFamily family = build_cycle_family(oct, 3, 1);
  const auto full = build_tree_graph(oct.graph(), trees, family);
  const auto lean = build_tree_graph(oct.graph(), trees, family, {.keep_adjacency = false});
  CHECK_FALSE(lean.has_adjacency());
  CHECK(std::ranges::equal(full.component_labels(), lean.component_labels()));
  CHECK(full.isolated_count() == lean.isolated_count());
  CHECK(components_summary(full) == components_summary(lean));

  // Summary order: size descending, then representative; members ascending.
  const auto summary = components_summary(full);
  std::size_t total = 0;
  for (std::size_t i = 0; i < summary.size(); ++i) {
    total += summary[i].size;
    const auto members = component_members(full, summary[i].representative);
    CHECK(members.size() == summary[i].size);
    CHECK(members.front() == summary[i].representative);
    CHECK(std::is_sorted(members.begin(), members.end()));
    if (i > 0) {
      CHECK((summary[i - 1].size > summary[i].size ||
             (summary[i - 1].size == summary[i].size &&
              summary[i - 1].representative < summary[i].representative)));
    }
  }
  CHECK(total == trees.size());
}

TEST_CASE("incomplete tree lists are rejected") {
  const PlaneGraph oct = octahedron();
  const Graph& g = oct.graph();
  auto trees = enumerate_spanning_trees(g);
  const CycleFamily family = build_cycle_family(oct, 3, 1);

  auto expect = [&](const std::vector<SpanningTree>& list) {
    try {
      build_tree_graph(g, list, family);
      FAIL("expected IncompleteTreeList");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IncompleteTreeList);
    }
  };
  auto missing = trees;
  missing.pop_back();
  expect(missing);
  auto dup = trees;
  dup.back() = dup.front();
  expect(dup);
}

TEST_CASE("degree-arboreality duality") {
  SUBCASE("every adjacent face pair of the octahedron") {
    const PlaneGraph oct = octahedron();
    const Graph& g = oct.graph();
    const auto trees = enumerate_spanning_trees(g);
    const auto internal = oct.internal_faces();
    std::size_t checked = 0;
    for (auto [a, b] : adjacent_face_pairs(oct, internal)) {
      const CycleFamily family = build_cycle_family(oct, a, b);
      const auto arb = is_arboreal(g, trees, family);
      const auto tg = build_tree_graph(g, trees, family);
      CHECK(arb.arboreal == (tg.isolated_count() == 0));
      if (!arb.arboreal) CHECK(tg.degree(*arb.violating_tree) == 0);
      ++checked;
    }
    CHECK(checked == 18);
  }
  SUBCASE("random graphs and families") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
      const Graph g = oracle::random_connected_graph(rng, 3 + iter % 4, 0.7);
      const auto trees = enumerate_spanning_trees(g);
      const CycleFamily family(g, random_family(rng, enumerate_cycles(g)));
      const auto tg = build_tree_graph(g, trees, family);
      CHECK(is_arboreal(g, trees, family).arboreal == (tg.isolated_count() == 0));
    }
  }
}

TEST_CASE("is_arboreal agrees with the definition") {
  const PlaneGraph oct = octahedron();
  const Graph& g = oct.graph();
  const auto trees = enumerate_spanning_trees(g);

  auto brute = [&](const std::vector<EdgeSet>& fam) -> std::optional<TreeId> {
    for (TreeId t = 0; t < trees.size(); ++t) {
      bool any = false;
      for (const auto& c : oracle::brute_fundamental_cycles(g, trees[t].edges())) any = any || oracle::contains(fam, c);
      if (!any) return t;
    }
    return std::nullopt;
  };
  // Internal faces with face 3 simply removed.
  std::vector<EdgeSet> removed;
  for (FaceId f : oct.internal_faces()) {
    if (f != 3) removed.push_back(oct.face(f));
  }
  const auto res = is_arboreal(g, trees, CycleFamily(g, removed));
  CHECK(res.violating_tree == brute(removed));
  if (res.violating_tree) {
    for (const auto& c : oracle::brute_fundamental_cycles(g, trees[*res.violating_tree].edges())) {
      CHECK_FALSE(oracle::contains(removed, c));
    }
  }
  const CycleFamily cx = build_cycle_family(oct, 3, 1);
  const std::vector<EdgeSet> cxv(cx.cycles().begin(), cx.cycles().end());
  CHECK(is_arboreal(g, trees, cx).arboreal);
  CHECK_FALSE(brute(cxv).has_value());

  // family_fundamental_cycles vs the pruning oracle.
  for (TreeId t = 0; t < trees.size(); t += 7) {
    std::vector<std::size_t> expect;
    const auto fc = oracle::brute_fundamental_cycles(g, trees[t].edges());
    for (std::size_t i = 0; i < cx.size(); ++i) {
      if (oracle::contains(fc, cx[i])) expect.push_back(i);
    }
    CHECK(family_fundamental_cycles(g, trees[t], cx) == expect);
  }
}

TEST_CASE("cyclic spanning") {
  SUBCASE("witness shapes") {
    const PlaneGraph oct = octahedron();
    const Graph& g = oct.graph();
    const auto cycles = enumerate_cycles(g);
    const CycleFamily family = build_cycle_family(oct, 3, 1);
    const auto res = cyclically_spans(g, family, cycles);
    CHECK(res.spans());
    CHECK(res.reached_count() == cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto w = res.witness(i);
      REQUIRE(w.has_value());
      CHECK(w->target == cycles[i]);
      CHECK(validate_witness(g, family, *w));
      if (family.contains(cycles[i])) CHECK(w->sequence.size() == 1);
    }
    // alpha itself is reached as (alpha xor beta) xor beta.
    const auto alpha = std::find(cycles.begin(), cycles.end(), oct.face(3)) - cycles.begin();
    const auto w = res.witness(static_cast<std::size_t>(alpha));
    REQUIRE(w->sequence.size() == 2);
    const std::set<EdgeSet> used{family[w->sequence[0]], family[w->sequence[1]]};
    CHECK(used == std::set<EdgeSet>{oct.face(3) ^ oct.face(1), oct.face(1)});
  }
  SUBCASE("internal faces span on G0 and G1") {
    for (std::size_t n : {0U, 1U}) {
      const auto lo = layered_octahedron(n);
      const Graph& g = lo.plane.graph();
      std::vector<EdgeSet> faces;
      for (FaceId f : lo.plane.internal_faces()) faces.push_back(lo.plane.face(f));
      const auto res = cyclically_spans(g, CycleFamily(g, faces), enumerate_cycles(g));
      CHECK(res.spans());
    }
  }
  SUBCASE("agrees with the closure oracle, and connectivity implies spanning") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
      const Graph g = oracle::random_connected_graph(rng, 3 + iter % 4, 0.7);
      const auto cycles = enumerate_cycles(g);
      const auto fam = random_family(rng, cycles);
      const CycleFamily family(g, fam);
      const auto res = cyclically_spans(g, family, cycles);
      CHECK(res.reached_count() == oracle::brute_span_closure(g, fam).size());
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (res.reached(i)) CHECK(validate_witness(g, family, *res.witness(i)));
      }
      const auto trees = enumerate_spanning_trees(g);
      if (build_tree_graph(g, trees, family).is_connected()) CHECK(res.spans());
      CHECK(build_tree_graph(g, trees, kAllCycles).is_connected());
    }
  }
  SUBCASE("errors") {
    const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const auto cycles = enumerate_cycles(g);
    const CycleFamily family(g, {g.make_set({0, 1, 4})});
    const std::vector<EdgeSet> partial{g.make_set({0, 1, 2, 3})};
    try {
      cyclically_spans(g, family, partial);
      FAIL("expected FamilyNotSubsetOfCycles");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FamilyNotSubsetOfCycles);
    }
    const auto res = cyclically_spans(g, family, cycles);
    CHECK_FALSE(res.spans());
    CHECK(res.first_unreached().has_value());
    CHECK_FALSE(res.witness(*res.first_unreached()).has_value());
  }
}
