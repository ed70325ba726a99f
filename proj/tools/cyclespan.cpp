// cyclespan: verify the layered-octahedron construction, inspect tree graphs
// of arbitrary small graphs, and run the random consistency search.
//
// Exit codes: 0 ok, 2 resource guard, 3 claim failed, 4 input error, 64 usage.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cyclespan/counterexample.hpp"
#include "cyclespan/cycles.hpp"
#include "cyclespan/error.hpp"
#include "cyclespan/harness.hpp"
#include "cyclespan/io.hpp"
#include "cyclespan/tree_graph.hpp"

namespace cs = cyclespan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGuard = 2;
constexpr int kExitClaim = 3;
constexpr int kExitInput = 4;
constexpr int kExitUsage = 64;

int exit_code_for(const cs::Error& e) {
  if (cs::is_resource_guard(e.code())) return kExitGuard;
  if (e.code() == cs::ErrorCode::ClaimFailed) return kExitClaim;
  return kExitInput;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const cs::CounterexampleReport& r, std::ostream& out) {
  out << "G_" << r.n << ": " << r.vertices << " vertices, " << r.edges << " edges, " << r.faces
      << " faces\n";
  out << "spanning trees: " << r.tree_count.str() << ", cycles: " << r.cycle_count << '\n';
  out << "binding: alpha=" << r.binding.alpha << " beta=" << r.binding.beta << " rho=" << r.binding.rho
      << '\n';
  out << "  biconnected:  " << yes_no(r.biconnected) << '\n';
  out << "  arboreal:     " << yes_no(r.arboreal) << '\n';
  out << "  spans:        " << yes_no(r.spans);
  if (r.spans) out << " (longest witness " << r.span_witness_max_length << ")";
  out << '\n';
  out << "  disconnected: " << yes_no(r.disconnected) << " (" << r.components.size() << " components)\n";
  out << "  rho unique:   " << yes_no(r.rho_unique) << '\n';
  out << "component sizes:";
  for (const auto& c : r.components) out << ' ' << c.size;
  out << '\n';
  out << "size-3 components: " << r.size3_components;
  if (r.size3_components > 0) {
    const auto& t = r.binding.small_component_tree_ids;
    out << " (first: trees " << t[0] << ", " << t[1] << ", " << t[2] << ")";
  }
  out << '\n';
  out << "verdict: " << (r.verdict ? "COUNTEREXAMPLE VERIFIED" : "NOT VERIFIED") << '\n';
}

struct VerifyArgs {
  std::size_t n = 0;
  std::optional<std::string> json;
  std::size_t max_trees = cs::kDefaultTreeLimit;
  std::size_t max_cycles = cs::kDefaultCycleLimit;
  bool witnesses = false;
};

int run_verify(const VerifyArgs& a) {
  cs::VerifyOptions opts;
  opts.limits = {a.max_trees, a.max_cycles};
  opts.keep_witnesses = a.witnesses;
  auto emit = [&](const cs::CounterexampleReport& r) {
    print_report(r, std::cout);
    if (a.json) cs::io::write_text_file(*a.json, cs::io::report_to_json(r).dump(2) + "\n");
  };
  try {
    const auto report = cs::verify_counterexample(a.n, opts);
    emit(report);
    return report.verdict ? kExitOk : kExitClaim;
  } catch (const cs::ClaimFailedError& e) {
    emit(e.report());
    std::cerr << "error: claim " << cs::to_string(e.claim()) << " failed\n";
    return kExitClaim;
  }
}

struct TreeGraphArgs {
  std::string graph_file;
  std::optional<std::string> cycles_file;
  bool all = false;
  bool components = false;
  std::optional<std::string> dot;
  std::size_t max_trees = cs::kDefaultTreeLimit;
};

int run_treegraph(const TreeGraphArgs& a) {
  const auto file = cs::io::read_graph_file(a.graph_file);
  const cs::Graph& g = file.graph;
  if (file.has_faces()) file.plane();  // validates the embedding

  const auto trees = cs::enumerate_spanning_trees(g, a.max_trees);
  const cs::TreeGraphOptions options{a.dot.has_value()};
  std::optional<cs::CycleFamily> family;
  cs::TreeGraphAdjacency tg;
  if (a.cycles_file) {
    family.emplace(g, cs::io::read_cycle_file(*a.cycles_file, g));
    tg = cs::build_tree_graph(g, trees, *family, options);
  } else {
    tg = cs::build_tree_graph(g, trees, cs::kAllCycles, options);
  }

  const std::size_t comps = tg.component_count();
  std::cout << trees.size() << (trees.size() == 1 ? " tree, " : " trees, ") << comps
            << (comps == 1 ? " component" : " components") << '\n';
  if (family) {
    std::cout << "family: " << family->size() << " cycles, arboreal: "
              << yes_no(cs::is_arboreal(g, trees, *family).arboreal) << '\n';
  }
  if (a.components) {
    std::cout << "components (size representative):\n";
    for (const auto& c : cs::components_summary(tg)) {
      std::cout << "  " << c.size << ' ' << c.representative << '\n';
    }
  }
  if (a.dot) {
    std::ofstream out(*a.dot);
    if (!out) throw std::runtime_error("cannot write " + *a.dot);
    cs::io::write_dot(out, tg, trees);
  }
  return kExitOk;
}

struct SearchArgs {
  std::uint64_t seed = 42;
  std::size_t max_vertices = 5;
  std::size_t samples = 100;
  std::optional<std::string> out;
  bool include_octahedron = false;
  unsigned workers = 1;
};

int run_search(const SearchArgs& a) {
  cs::HarnessOptions opts;
  opts.include_octahedron = a.include_octahedron;
  opts.workers = a.workers;
  const auto summary = cs::random_harness(a.seed, a.max_vertices, a.samples, opts);
  const std::string json = cs::io::harness_to_json(summary).dump(2) + "\n";
  if (a.out) {
    cs::io::write_text_file(*a.out, json);
  }
  std::cout << "samples: " << summary.samples << (summary.include_octahedron ? " (+ octahedron)" : "")
            << '\n'
            << "connected tree graphs: " << summary.connected_tree_graphs << '\n'
            << "arboreal families: " << summary.arboreal_families << '\n'
            << "spanning families: " << summary.spanning_families << '\n'
            << "connected-but-not-spanning (must be 0): " << summary.connected_not_spanning.size() << '\n'
            << "counterexamples (2-connected, arboreal, spanning, disconnected): "
            << summary.disconnected_spanning.size() << '\n'
            << "degree/arboreal discrepancies (must be 0): " << summary.duality_discrepancies.size()
            << '\n';
  if (!a.out) std::cout << json;
  const bool clean = summary.connected_not_spanning.empty() && summary.duality_discrepancies.empty();
  return clean ? kExitOk : kExitClaim;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree graphs of cycle families and the layered-octahedron counterexample"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify the construction on G_N");
  verify->add_option("N", va.n, "Number of outer shells")->required();
  verify->add_option("--json", va.json, "Write the report as JSON");
  verify->add_option("--max-trees", va.max_trees, "Spanning-tree enumeration limit");
  verify->add_option("--max-cycles", va.max_cycles, "Cycle enumeration limit");
  verify->add_flag("--witnesses", va.witnesses, "Include per-cycle spanning sequences in the JSON report");

  TreeGraphArgs ta;
  auto* treegraph = app.add_subcommand("treegraph", "Build T(G) or T(G,C) for a graph file");
  treegraph->add_option("GRAPHFILE", ta.graph_file, "Graph file")->required();
  auto* cycles_opt = treegraph->add_option("--cycles", ta.cycles_file, "Cycle family, one cycle per line");
  auto* all_opt = treegraph->add_flag("--all", ta.all, "Use every cycle (unrestricted tree graph)");
  cycles_opt->excludes(all_opt);
  treegraph->add_flag("--components", ta.components, "List component sizes");
  treegraph->add_option("--dot", ta.dot, "Write the tree graph in DOT format");
  treegraph->add_option("--max-trees", ta.max_trees, "Spanning-tree enumeration limit");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Random search over small graphs and cycle families");
  search->add_option("--seed", sa.seed, "Random seed");
  search->add_option("--max-vertices", sa.max_vertices, "Largest sampled graph")
      ->check(CLI::Range(std::size_t{3}, cs::kHarnessMaxVertices));
  search->add_option("--samples", sa.samples, "Number of samples");
  search->add_option("--out", sa.out, "Write the JSON summary here instead of stdout");
  search->add_flag("--include-octahedron", sa.include_octahedron,
                   "Add the octahedron with its counterexample family");
  search->add_option("--workers", sa.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (*treegraph && !ta.cycles_file && !ta.all) {
      throw CLI::ValidationError("treegraph", "one of --cycles or --all is required");
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*treegraph) return run_treegraph(ta);
    return run_search(sa);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
