#include "cyclespan/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cyclespan/cycles.hpp"
#include "cyclespan/error.hpp"

namespace cyclespan::io {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

// Whitespace-separated tokens of one line, comment stripped.
std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    parse_error(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    f(tokens(text.substr(0, nl)), line_no);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
}

EdgeSet parse_edge_ids(std::span<const std::string_view> toks, std::size_t m, std::size_t line) {
  EdgeSet s(m);
  for (auto tok : toks) {
    const auto e = parse_number(tok, line);
    if (e >= m) parse_error(line, "edge id " + std::to_string(e) + " out of range");
    if (s.test(static_cast<EdgeId>(e))) parse_error(line, "edge id " + std::to_string(e) + " repeated");
    s.set(static_cast<EdgeId>(e));
  }
  return s;
}

std::string join_ids(const EdgeSet& s, char sep) {
  std::string out;
  s.for_each([&](EdgeId e) {
    if (!out.empty()) out += sep;
    out += std::to_string(e);
  });
  return out;
}

}  // namespace

PlaneGraph GraphFile::plane() const { return PlaneGraph(graph, faces, 0); }

GraphFile parse_graph_file(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::pair<std::vector<std::string_view>, std::size_t>> face_lines;

  for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line) {
    if (toks.empty()) return;
    if (toks[0] == "V") {
      if (n) parse_error(line, "duplicate V line");
      if (toks.size() != 2) parse_error(line, "expected 'V <n>'");
      n = parse_number(toks[1], line);
    } else if (toks[0] == "E") {
      if (!n) parse_error(line, "E line before V line");
      if (!face_lines.empty()) parse_error(line, "E line after F lines");
      if (toks.size() != 3) parse_error(line, "expected 'E <u> <v>'");
      const auto u = parse_number(toks[1], line);
      const auto v = parse_number(toks[2], line);
      if (u > UINT32_MAX || v > UINT32_MAX) parse_error(line, "vertex id too large");
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    } else if (toks[0] == "F") {
      if (!n) parse_error(line, "F line before V line");
      if (toks.size() < 2) parse_error(line, "empty face");
      face_lines.emplace_back(std::vector<std::string_view>(toks.begin() + 1, toks.end()), line);
    } else {
      parse_error(line, "unknown record '" + std::string(toks[0]) + "'");
    }
  });
  if (!n) parse_error(0, "missing V line");

  GraphFile file;
  file.graph = Graph(*n, std::move(edges));
  for (const auto& [toks, line] : face_lines) {
    file.faces.push_back(parse_edge_ids(toks, file.graph.edge_count(), line));
  }
  return file;
}

GraphFile read_graph_file(const std::string& path) { return parse_graph_file(read_text_file(path)); }

std::string serialize_graph(const Graph& g, std::span<const EdgeSet> faces) {
  std::ostringstream out;
  out << "V " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "E " << e.u << ' ' << e.v << '\n';
  for (const EdgeSet& f : faces) out << "F " << join_ids(f, ' ') << '\n';
  return out.str();
}

std::string serialize_plane_graph(const PlaneGraph& pg) {
  std::vector<EdgeSet> faces{pg.face(pg.outer_face())};
  for (FaceId f : pg.internal_faces()) faces.push_back(pg.face(f));
  return serialize_graph(pg.graph(), faces);
}

std::vector<EdgeSet> parse_cycle_file(std::string_view text, const Graph& g) {
  std::vector<EdgeSet> out;
  for_each_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line) {
    if (toks.empty()) return;
    EdgeSet s = parse_edge_ids(toks, g.edge_count(), line);
    if (!is_cycle(g, s)) {
      throw Error(ErrorCode::NotACycleInFile,
                  "line " + std::to_string(line) + ": edges {" + join_ids(s, ',') + "} are not a cycle");
    }
    out.push_back(s);
  });
  return out;
}

std::vector<EdgeSet> read_cycle_file(const std::string& path, const Graph& g) {
  return parse_cycle_file(read_text_file(path), g);
}

std::string serialize_cycles(std::span<const EdgeSet> cycles) {
  std::string out;
  for (const EdgeSet& c : cycles) out += join_ids(c, ' ') + '\n';
  return out;
}

nlohmann::ordered_json report_to_json(const CounterexampleReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["graph"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"faces", r.faces}};
  j["binding"] = {{"alpha", r.binding.alpha}, {"beta", r.binding.beta}, {"rho", r.binding.rho}};
  j["checks"] = {{"biconnected", r.biconnected},
                 {"arboreal", r.arboreal},
                 {"spans", r.spans},
                 {"disconnected", r.disconnected},
                 {"rho_unique", r.rho_unique}};
  ordered_json sizes = ordered_json::array();
  for (const auto& c : r.components) sizes.push_back(c.size);
  j["components"] = std::move(sizes);
  j["tree_count"] = r.tree_count.str();
  if (!r.witnesses.empty()) {
    ordered_json w = ordered_json::array();
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      w.push_back({{"cycle", r.witness_targets[i].ids()}, {"sequence", r.witnesses[i]}});
    }
    j["witnesses"] = std::move(w);
  }
  j["verdict"] = r.verdict;
  return j;
}

namespace {

nlohmann::ordered_json sample_to_json(const HarnessSample& s) {
  using nlohmann::ordered_json;
  ordered_json edges = ordered_json::array();
  for (const Edge& e : s.edges) edges.push_back({e.u, e.v});
  ordered_json family = ordered_json::array();
  for (const EdgeSet& c : s.family) family.push_back(c.ids());
  return {{"index", s.index},
          {"vertices", s.vertices},
          {"edges", std::move(edges)},
          {"family", std::move(family)},
          {"trees", s.tree_count},
          {"cycles", s.cycle_count},
          {"biconnected", s.biconnected},
          {"arboreal", s.arboreal},
          {"spans", s.spans},
          {"tree_graph_connected", s.tree_graph_connected},
          {"components", s.component_sizes}};
}

nlohmann::ordered_json samples_to_json(const std::vector<HarnessSample>& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& s : v) out.push_back(sample_to_json(s));
  return out;
}

}  // namespace

nlohmann::ordered_json harness_to_json(const HarnessSummary& s) {
  nlohmann::ordered_json j;
  j["seed"] = s.seed;
  j["max_vertices"] = s.max_vertices;
  j["samples"] = s.samples;
  j["include_octahedron"] = s.include_octahedron;
  j["connected_tree_graphs"] = s.connected_tree_graphs;
  j["spanning_families"] = s.spanning_families;
  j["arboreal_families"] = s.arboreal_families;
  j["connected_not_spanning"] = samples_to_json(s.connected_not_spanning);
  j["disconnected_spanning"] = samples_to_json(s.disconnected_spanning);
  j["duality_discrepancies"] = samples_to_json(s.duality_discrepancies);
  return j;
}

void write_dot(std::ostream& out, const TreeGraphAdjacency& tg, std::span<const SpanningTree> trees) {
  if (!tg.has_adjacency() && tg.tree_count() > 0) {
    throw std::invalid_argument("DOT export needs a tree graph built with adjacency lists");
  }
  out << "graph T {\n";
  for (TreeId t = 0; t < tg.tree_count(); ++t) {
    out << "  t" << t << " [label=\"{" << join_ids(trees[t].edges(), ',') << "}\"];\n";
  }
  for (TreeId t = 0; t < tg.tree_count(); ++t) {
    for (TreeId u : tg.neighbors(t)) {
      if (t < u) out << "  t" << t << " -- t" << u << ";\n";
    }
  }
  out << "}\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace cyclespan::io
