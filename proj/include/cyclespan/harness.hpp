#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclespan/edge_set.hpp"
#include "cyclespan/graph.hpp"

namespace cyclespan {

inline constexpr std::size_t kHarnessMaxVertices = 8;

struct HarnessOptions {
  // Append the octahedron with its counterexample family as one extra sample.
  bool include_octahedron = false;
  // Samples are independent; results do not depend on this.
  unsigned workers = 1;
};

// One sampled instance (G, C) and what was decided about it.
struct HarnessSample {
  // Sample index; the octahedron sample, if any, comes last.
  std::size_t index = 0;
  std::size_t vertices = 0;
  std::vector<Edge> edges;
  std::vector<EdgeSet> family;
  std::size_t tree_count = 0;
  std::size_t cycle_count = 0;
  bool biconnected = false;
  bool arboreal = false;
  bool spans = false;
  bool tree_graph_connected = false;
  std::size_t isolated_trees = 0;
  std::vector<std::size_t> component_sizes;
};

struct HarnessSummary {
  std::uint64_t seed = 0;
  std::size_t max_vertices = 0;
  std::size_t samples = 0;
  bool include_octahedron = false;

  std::size_t connected_tree_graphs = 0;
  std::size_t spanning_families = 0;
  std::size_t arboreal_families = 0;
  // T(G,C) connected but C does not cyclically span: always a bug.
  std::vector<HarnessSample> connected_not_spanning;
  // 2-connected, arboreal, spanning and yet T(G,C) disconnected.
  std::vector<HarnessSample> disconnected_spanning;
  // is_arboreal disagrees with "no isolated tree".
  std::vector<HarnessSample> duality_discrepancies;
};

// Per-sample generator seed, so samples can run in any order.
std::uint64_t derive_sample_seed(std::uint64_t seed, std::size_t index) noexcept;

// Draws one connected graph on 3..max_vertices vertices and a random cycle
// subfamily from a sample seed.
struct SampledInstance {
  Graph graph;
  std::vector<EdgeSet> family;
};
SampledInstance sample_instance(std::uint64_t sample_seed, std::size_t max_vertices);

HarnessSample evaluate_instance(const Graph& g, std::vector<EdgeSet> family);

// Deterministic for a fixed seed whatever the worker count. max_vertices
// outside [3, 8] is a usage error (std::invalid_argument).
HarnessSummary random_harness(std::uint64_t seed, std::size_t max_vertices, std::size_t samples,
                              const HarnessOptions& options = {});

}  // namespace cyclespan
