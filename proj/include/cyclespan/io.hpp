#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclespan/counterexample.hpp"
#include "cyclespan/graph.hpp"
#include "cyclespan/harness.hpp"
#include "cyclespan/plane.hpp"
#include "cyclespan/spanning.hpp"
#include "cyclespan/tree_graph.hpp"

namespace cyclespan::io {

inline constexpr int kReportSchemaVersion = 1;

// Graph file:
//   V <n>
//   E <u> <v>          edge id = order of appearance
//   F <e1> <e2> ...    optional faces as edge ids; the first F line is the outer face
// '#' starts a comment; blank lines are ignored.
struct GraphFile {
  Graph graph;
  // Outer face first. Empty when the file has no F lines.
  std::vector<EdgeSet> faces;

  bool has_faces() const noexcept { return !faces.empty(); }
  // Throws InvalidPlaneGraph when the faces do not form a valid embedding.
  PlaneGraph plane() const;
};

// Throws ParseError (bad syntax, edge ids out of range) or the graph's own
// construction errors.
GraphFile parse_graph_file(std::string_view text);
GraphFile read_graph_file(const std::string& path);

std::string serialize_graph(const Graph& g, std::span<const EdgeSet> faces = {});
// Outer face is written first.
std::string serialize_plane_graph(const PlaneGraph& pg);

// One cycle per line as space-separated edge ids. Throws ParseError or
// NotACycleInFile (with the line number).
std::vector<EdgeSet> parse_cycle_file(std::string_view text, const Graph& g);
std::vector<EdgeSet> read_cycle_file(const std::string& path, const Graph& g);
std::string serialize_cycles(std::span<const EdgeSet> cycles);

nlohmann::ordered_json report_to_json(const CounterexampleReport& report);
nlohmann::ordered_json harness_to_json(const HarnessSummary& summary);

// Undirected DOT graph: one node per tree, labelled by its edge ids, one edge
// per tree-graph adjacency. Requires adjacency lists.
void write_dot(std::ostream& out, const TreeGraphAdjacency& tg, std::span<const SpanningTree> trees);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace cyclespan::io
