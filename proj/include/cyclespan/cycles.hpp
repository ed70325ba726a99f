#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclespan/edge_set.hpp"
#include "cyclespan/graph.hpp"

namespace cyclespan {

inline constexpr std::size_t kDefaultCycleLimit = 10'000'000;

// True iff s is a single simple cycle: nonempty, every touched vertex has
// degree 2 in s, and the touched vertices form one component.
bool is_cycle(const Graph& g, const EdgeSet& s);

// All simple cycles of g, sorted in canonical EdgeSet order. Throws
// CycleLimitExceeded once more than `limit` cycles are found.
std::vector<EdgeSet> enumerate_cycles(const Graph& g, std::size_t limit = kDefaultCycleLimit);

// Rank over GF(2) of a list of edge sets (Gaussian elimination on bit vectors).
std::size_t gf2_rank(std::span<const EdgeSet> sets);

}  // namespace cyclespan
