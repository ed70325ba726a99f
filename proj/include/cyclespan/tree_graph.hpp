#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cyclespan/edge_set.hpp"
#include "cyclespan/graph.hpp"
#include "cyclespan/spanning.hpp"

namespace cyclespan {

// Distinct cycles of one graph, in caller order. Member indices are stable.
class CycleFamily {
 public:
  CycleFamily() = default;
  // Throws FamilyNotCycles for a non-cycle or a repeated member.
  CycleFamily(const Graph& g, std::vector<EdgeSet> cycles);

  std::size_t size() const noexcept { return cycles_.size(); }
  const EdgeSet& operator[](std::size_t i) const { return cycles_[i]; }
  std::span<const EdgeSet> cycles() const noexcept { return cycles_; }

  std::optional<std::size_t> index_of(const EdgeSet& c) const;
  bool contains(const EdgeSet& c) const { return index_.count(c) != 0; }

 private:
  std::vector<EdgeSet> cycles_;
  std::unordered_map<EdgeSet, std::uint32_t, EdgeSetHash> index_;
};

// Tag selecting the unrestricted tree graph T(G).
struct AllCycles {};
inline constexpr AllCycles kAllCycles{};

using TreeId = std::uint32_t;

// T(G) or T(G,C) over a canonical tree list: CSR adjacency plus component labels.
class TreeGraphAdjacency {
 public:
  std::size_t tree_count() const noexcept { return labels_.size(); }
  bool has_adjacency() const noexcept { return !offsets_.empty(); }
  std::span<const TreeId> neighbors(TreeId t) const {
    return {neighbors_.data() + offsets_[t], neighbors_.data() + offsets_[t + 1]};
  }
  std::size_t degree(TreeId t) const { return offsets_[t + 1] - offsets_[t]; }
  // Number of undirected tree-graph edges.
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Labels numbered in order of first appearance over tree ids.
  std::span<const std::uint32_t> component_labels() const noexcept { return labels_; }
  std::size_t component_count() const noexcept { return component_count_; }
  bool is_connected() const noexcept { return component_count_ <= 1; }
  // Trees with no neighbour at all.
  std::size_t isolated_count() const noexcept { return isolated_; }

 private:
  friend class TreeGraphBuilder;

  std::vector<std::size_t> offsets_;
  std::vector<TreeId> neighbors_;
  std::vector<std::uint32_t> labels_;
  std::size_t component_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t isolated_ = 0;
};

struct TreeGraphOptions {
  // Components only when false; saves the neighbour lists on large inputs.
  bool keep_adjacency = true;
};

// Trees i, j are adjacent when they differ by one edge exchange and the cycle
// of the exchange lies in the family (any cycle for kAllCycles). Neighbours
// are found by exchanging along each tree's fundamental cycles and looking the
// result up in the tree list. Throws IncompleteTreeList when `trees` is not
// the full, duplicate-free spanning-tree list of g.
TreeGraphAdjacency build_tree_graph(const Graph& g, std::span<const SpanningTree> trees,
                                    const CycleFamily& family, TreeGraphOptions options = {});
TreeGraphAdjacency build_tree_graph(const Graph& g, std::span<const SpanningTree> trees,
                                    AllCycles, TreeGraphOptions options = {});

struct ArborealResult {
  bool arboreal = false;
  // First tree (by id) none of whose fundamental cycles is in the family.
  std::optional<TreeId> violating_tree;
};

ArborealResult is_arboreal(const Graph& g, std::span<const SpanningTree> trees,
                           const CycleFamily& family);

// Family members that are fundamental cycles of t, ascending member index.
std::vector<std::size_t> family_fundamental_cycles(const Graph& g, const SpanningTree& t,
                                                   const CycleFamily& family);

struct SpanWitness {
  EdgeSet target;
  // Family member indices; running xor is a cycle at every step.
  std::vector<std::size_t> sequence;
};

bool validate_witness(const Graph& g, const CycleFamily& family, const SpanWitness& w);

// Breadth-first search over the cycles of g: from each member of the family,
// step tau -> tau xor c for members c whenever the result is a cycle.
class SpanResult {
 public:
  bool spans() const noexcept { return reached_ == cycles_.size(); }
  std::size_t reached_count() const noexcept { return reached_; }
  std::size_t cycle_count() const noexcept { return cycles_.size(); }
  std::span<const EdgeSet> cycles() const noexcept { return cycles_; }

  bool reached(std::size_t cycle) const { return depth_[cycle] != kUnreached; }
  // Witness of minimum length, or nullopt when the cycle is not reached.
  std::optional<SpanWitness> witness(std::size_t cycle) const;
  std::optional<std::size_t> first_unreached() const;
  // Longest witness over reached cycles.
  std::size_t max_witness_length() const;

 private:
  friend SpanResult cyclically_spans(const Graph&, const CycleFamily&, std::span<const EdgeSet>);

  static constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);

  std::vector<EdgeSet> cycles_;
  std::vector<std::int64_t> pred_;     // -1 at a family member
  std::vector<std::uint32_t> member_;  // member applied on the last step
  std::vector<std::uint32_t> depth_;
  std::size_t reached_ = 0;
};

// `all_cycles` must be every cycle of g. Ties go to the smaller member index.
// Every witness is re-validated before returning (ClaimFailed on a mismatch).
// Throws FamilyNotSubsetOfCycles.
SpanResult cyclically_spans(const Graph& g, const CycleFamily& family,
                            std::span<const EdgeSet> all_cycles);

struct ComponentSummary {
  std::size_t size;
  TreeId representative;

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

// Component sizes descending; ties by smallest member tree id, which is also
// the representative.
std::vector<ComponentSummary> components_summary(const TreeGraphAdjacency& tg);

// Trees of the component containing tree t, ascending.
std::vector<TreeId> component_members(const TreeGraphAdjacency& tg, TreeId t);

}  // namespace cyclespan
