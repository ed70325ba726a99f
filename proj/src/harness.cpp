#include "cyclespan/harness.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "cyclespan/counterexample.hpp"
#include "cyclespan/cycles.hpp"
#include "cyclespan/spanning.hpp"
#include "cyclespan/tree_graph.hpp"

namespace cyclespan {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Probabilities are 32-bit fixed point: an event with weight w happens when a
// fresh 32-bit draw is below w. Keeps sampling free of floating point and of
// library-specific distribution algorithms.
bool bernoulli(std::uint64_t& state, std::uint64_t weight) noexcept {
  return (splitmix64(state) >> 32) < weight;
}

}  // namespace

std::uint64_t derive_sample_seed(std::uint64_t seed, std::size_t index) noexcept {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(index) + 1));
  return splitmix64(state);
}

SampledInstance sample_instance(std::uint64_t sample_seed, std::size_t max_vertices) {
  std::uint64_t state = sample_seed;
  const std::size_t n = 3 + static_cast<std::size_t>(splitmix64(state) % (max_vertices - 2));
  // Edge probability in [1/4, 1), family keep probability in [0, 1).
  const std::uint64_t edge_weight = (std::uint64_t{1} << 30) + (splitmix64(state) >> 32) % (3ULL << 30);
  const std::uint64_t keep_weight = splitmix64(state) >> 32;

  for (;;) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (bernoulli(state, edge_weight)) edges.push_back({u, v});
      }
    }
    Graph g(n, std::move(edges));
    if (!is_connected(g)) continue;
    std::vector<EdgeSet> family;
    for (const EdgeSet& c : enumerate_cycles(g)) {
      if (bernoulli(state, keep_weight)) family.push_back(c);
    }
    return {std::move(g), std::move(family)};
  }
}

HarnessSample evaluate_instance(const Graph& g, std::vector<EdgeSet> family_cycles) {
  HarnessSample s;
  s.vertices = g.vertex_count();
  s.edges.assign(g.edges().begin(), g.edges().end());
  s.family = family_cycles;

  const auto trees = enumerate_spanning_trees(g);
  const auto cycles = enumerate_cycles(g);
  const CycleFamily family(g, std::move(family_cycles));
  s.tree_count = trees.size();
  s.cycle_count = cycles.size();
  s.biconnected = is_biconnected(g);
  s.arboreal = is_arboreal(g, trees, family).arboreal;
  s.spans = cyclically_spans(g, family, cycles).spans();

  const TreeGraphAdjacency tg = build_tree_graph(g, trees, family, {.keep_adjacency = false});
  s.tree_graph_connected = tg.is_connected();
  s.isolated_trees = tg.isolated_count();
  for (const auto& c : components_summary(tg)) s.component_sizes.push_back(c.size);
  return s;
}

HarnessSummary random_harness(std::uint64_t seed, std::size_t max_vertices, std::size_t samples,
                              const HarnessOptions& options) {
  if (max_vertices < 3 || max_vertices > kHarnessMaxVertices) {
    throw std::invalid_argument("max_vertices must lie in [3, " + std::to_string(kHarnessMaxVertices) +
                                "], got " + std::to_string(max_vertices));
  }
  std::vector<HarnessSample> results(samples);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < samples;) {
      SampledInstance inst = sample_instance(derive_sample_seed(seed, i), max_vertices);
      results[i] = evaluate_instance(inst.graph, std::move(inst.family));
      results[i].index = i;
    }
  };
  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  if (options.include_octahedron) {
    const PlaneGraph oct = octahedron();
    const LabelBinding b = find_alpha_beta(oct).front();
    const CycleFamily family = build_cycle_family(oct, b.alpha, b.beta);
    HarnessSample s = evaluate_instance(oct.graph(), {family.cycles().begin(), family.cycles().end()});
    s.index = samples;
    results.push_back(std::move(s));
  }

  HarnessSummary summary;
  summary.seed = seed;
  summary.max_vertices = max_vertices;
  summary.samples = samples;
  summary.include_octahedron = options.include_octahedron;
  for (auto& s : results) {
    summary.connected_tree_graphs += s.tree_graph_connected;
    summary.spanning_families += s.spans;
    summary.arboreal_families += s.arboreal;
    if (s.tree_graph_connected && !s.spans) summary.connected_not_spanning.push_back(s);
    if (s.biconnected && s.arboreal && s.spans && !s.tree_graph_connected) {
      summary.disconnected_spanning.push_back(s);
    }
    if (s.arboreal != (s.isolated_trees == 0)) summary.duality_discrepancies.push_back(s);
  }
  return summary;
}

}  // namespace cyclespan
