#include <doctest.h>

#include <random>
#include <regex>
#include <sstream>

#include "cyclespan/counterexample.hpp"
#include "cyclespan/error.hpp"
#include "cyclespan/io.hpp"
#include "cyclespan/plane.hpp"
#include "oracles.hpp"

using namespace cyclespan;

namespace {

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ClaimFailed;
}

}  // namespace

TEST_CASE("graph file round trip") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = oracle::random_connected_graph(rng, 1 + iter % 9, 0.5);
    const auto file = io::parse_graph_file(io::serialize_graph(g));
    CHECK(file.graph == g);
    CHECK_FALSE(file.has_faces());
  }
  for (std::size_t n : {0U, 1U, 2U}) {
    const auto lo = layered_octahedron(n);
    const auto text = io::serialize_plane_graph(lo.plane);
    const auto file = io::parse_graph_file(text);
    CHECK(file.graph == lo.plane.graph());
    const PlaneGraph back = file.plane();
    CHECK(back.outer_face() == 0);
    CHECK(back.face(0) == lo.plane.face(lo.plane.outer_face()));
    CHECK(back.face_count() == lo.plane.face_count());
    for (FaceId f = 0; f < lo.plane.face_count(); ++f) CHECK(back.find_face(lo.plane.face(f)).has_value());
    CHECK(io::serialize_plane_graph(back) == text);
  }
}

TEST_CASE("graph file syntax") {
  const auto file = io::parse_graph_file("# triangle\nV 3\n\nE 0 1   # first\nE 1 2\n  E 2 0\n");
  CHECK(file.graph == build_graph(3, {{0, 1}, {1, 2}, {2, 0}}));

  CHECK(error_code_of([] { io::parse_graph_file("E 0 1\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { io::parse_graph_file("V 3\nE 0 x\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { io::parse_graph_file("V 3\nE 0 1 2\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { io::parse_graph_file("V 3\nQ\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { io::parse_graph_file("# nothing\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { io::parse_graph_file("V 3\nV 3\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { io::parse_graph_file("V 3\nE 0 1\nF 0 5\n"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { io::parse_graph_file("V 2\nE 0 1\nE 1 0\n"); }) == ErrorCode::DuplicateEdge);
  CHECK(error_code_of([] { io::parse_graph_file("V 2\nE 0 2\n"); }) == ErrorCode::VertexOutOfRange);
  CHECK(error_code_of([] {
          io::parse_graph_file("V 3\nE 0 1\nE 1 2\nE 2 0\nF 0 1 2\n").plane();
        }) == ErrorCode::InvalidPlaneGraph);
}

TEST_CASE("cycle file") {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const auto cycles = io::parse_cycle_file("0 1 4\n# comment\n\n0 1 2 3\n", g);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == g.make_set({0, 1, 4}));
  CHECK(io::parse_cycle_file(io::serialize_cycles(cycles), g) == cycles);

  CHECK(error_code_of([&] { io::parse_cycle_file("0 1\n", g); }) == ErrorCode::NotACycleInFile);
  CHECK(error_code_of([&] { io::parse_cycle_file("0 1 2 3 4\n", g); }) == ErrorCode::NotACycleInFile);
  CHECK(error_code_of([&] { io::parse_cycle_file("0 1 9\n", g); }) == ErrorCode::ParseError);
  CHECK(error_code_of([&] { io::parse_cycle_file("0 1 -4\n", g); }) == ErrorCode::ParseError);
}

TEST_CASE("report JSON shape") {
  const auto r = verify_counterexample(0);
  const auto j = io::report_to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "n", "graph", "binding", "checks", "components",
                                         "tree_count", "verdict"});
  CHECK(j["tree_count"] == "384");
  CHECK(j["verdict"] == true);
  CHECK(j["graph"]["faces"] == 8);
  CHECK(j["checks"].size() == 5);

  const auto with = io::report_to_json(verify_counterexample(0, {.limits = {}, .keep_witnesses = true}));
  CHECK(with["witnesses"].size() == 63);
  CHECK(with.dump() == io::report_to_json(verify_counterexample(0, {.limits = {}, .keep_witnesses = true})).dump());
}

TEST_CASE("DOT export") {
  const PlaneGraph oct = octahedron();
  const Graph& g = oct.graph();
  const auto trees = enumerate_spanning_trees(g);
  const auto tg = build_tree_graph(g, trees, build_cycle_family(oct, 3, 1));
  std::ostringstream out;
  io::write_dot(out, tg, trees);
  const std::string dot = out.str();

  // Line grammar: header, node statements, edge statements, closing brace.
  std::istringstream in(dot);
  std::string line;
  std::getline(in, line);
  CHECK(line == "graph T {");
  const std::regex node(R"(  t(\d+) \[label="\{(\d+(,\d+)*)?\}"\];)");
  const std::regex edge(R"(  t(\d+) -- t(\d+);)");
  std::size_t nodes = 0, edges = 0;
  bool closed = false;
  while (std::getline(in, line)) {
    REQUIRE_FALSE(closed);
    if (line == "}") {
      closed = true;
    } else if (std::regex_match(line, node)) {
      ++nodes;
    } else if (std::smatch m; std::regex_match(line, m, edge)) {
      CHECK(std::stoul(m[1]) < trees.size());
      CHECK(std::stoul(m[2]) < trees.size());
      ++edges;
    } else {
      FAIL("unexpected DOT line: " << line);
    }
  }
  CHECK(closed);
  CHECK(nodes == trees.size());
  CHECK(edges == tg.edge_count());

  const auto lean = build_tree_graph(g, trees, kAllCycles, {.keep_adjacency = false});
  std::ostringstream sink;
  CHECK_THROWS_AS(io::write_dot(sink, lean, trees), std::invalid_argument);
}

TEST_CASE("harness JSON is deterministic") {
  const auto a = io::harness_to_json(random_harness(42, 5, 50)).dump(2);
  const auto b = io::harness_to_json(random_harness(42, 5, 50, {.include_octahedron = false, .workers = 3})).dump(2);
  CHECK(a == b);
  CHECK(a != io::harness_to_json(random_harness(43, 5, 50)).dump(2));
}
