#include "cyclespan/tree_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cyclespan/cycles.hpp"
#include "cyclespan/error.hpp"
#include "cyclespan/union_find.hpp"

namespace cyclespan {

CycleFamily::CycleFamily(const Graph& g, std::vector<EdgeSet> cycles) : cycles_(std::move(cycles)) {
  index_.reserve(cycles_.size());
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (!is_cycle(g, cycles_[i])) {
      throw Error(ErrorCode::FamilyNotCycles, "member " + std::to_string(i) + " is not a cycle");
    }
    if (!index_.emplace(cycles_[i], static_cast<std::uint32_t>(i)).second) {
      throw Error(ErrorCode::FamilyNotCycles, "member " + std::to_string(i) + " is repeated");
    }
  }
}

std::optional<std::size_t> CycleFamily::index_of(const EdgeSet& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Maps edge sets back to tree ids by binary search over a sorted permutation.
class TreeLookup {
 public:
  TreeLookup(const Graph& g, std::span<const SpanningTree> trees) : trees_(trees), order_(trees.size()) {
    const BigInt expected = count_spanning_trees(g);
    if (expected != BigInt(trees.size())) {
      throw Error(ErrorCode::IncompleteTreeList,
                  std::to_string(trees.size()) + " trees given, graph has " + expected.str());
    }
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<TreeId>(i);
    if (!std::is_sorted(trees.begin(), trees.end())) {
      std::sort(order_.begin(), order_.end(),
                [&](TreeId a, TreeId b) { return trees_[a] < trees_[b]; });
    }
    for (std::size_t i = 0; i + 1 < order_.size(); ++i) {
      if (trees_[order_[i]] == trees_[order_[i + 1]]) {
        throw Error(ErrorCode::IncompleteTreeList, "tree list contains duplicates");
      }
    }
  }

  std::optional<TreeId> find(const EdgeSet& s) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), s,
                               [&](TreeId id, const EdgeSet& key) { return trees_[id].edges() < key; });
    if (it == order_.end() || trees_[*it].edges() != s) return std::nullopt;
    return *it;
  }

 private:
  std::span<const SpanningTree> trees_;
  std::vector<TreeId> order_;
};

}  // namespace

class TreeGraphBuilder {
 public:
  template <class Accept>
  static TreeGraphAdjacency build(const Graph& g, std::span<const SpanningTree> trees, Accept accept,
                                  TreeGraphOptions options) {
    TreeLookup lookup(g, trees);
    const std::size_t count = trees.size();
    TreeGraphAdjacency tg;
    UnionFind<TreeId> uf(count);
    std::vector<TreeId> row;
    if (options.keep_adjacency) tg.offsets_.assign(1, 0);
    std::size_t directed = 0;

    for (TreeId i = 0; i < count; ++i) {
      const EdgeSet& t = trees[i].edges();
      TreePaths paths(g, t);
      row.clear();
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (t.test(e)) continue;
        const EdgeSet cycle = paths.fundamental_cycle(e);
        if (!accept(cycle)) continue;
        cycle.for_each([&](EdgeId f) {
          if (f == e) return;
          EdgeSet swapped = t;
          swapped.reset(f);
          swapped.set(e);
          auto j = lookup.find(swapped);
          if (!j) {
            throw Error(ErrorCode::IncompleteTreeList, "exchange leads outside the tree list");
          }
          row.push_back(*j);
          if (i < *j) uf.unite(i, *j);
        });
      }
      if (row.empty()) ++tg.isolated_;
      directed += row.size();
      if (options.keep_adjacency) {
        std::sort(row.begin(), row.end());
        tg.neighbors_.insert(tg.neighbors_.end(), row.begin(), row.end());
        tg.offsets_.push_back(tg.neighbors_.size());
      }
    }
    tg.edge_count_ = directed / 2;

    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> root_label(count, kUnset);
    tg.labels_.resize(count);
    for (TreeId i = 0; i < count; ++i) {
      TreeId r = uf.find(i);
      if (root_label[r] == kUnset) root_label[r] = static_cast<std::uint32_t>(tg.component_count_++);
      tg.labels_[i] = root_label[r];
    }
    return tg;
  }
};

TreeGraphAdjacency build_tree_graph(const Graph& g, std::span<const SpanningTree> trees,
                                    const CycleFamily& family, TreeGraphOptions options) {
  return TreeGraphBuilder::build(
      g, trees, [&](const EdgeSet& c) { return family.contains(c); }, options);
}

TreeGraphAdjacency build_tree_graph(const Graph& g, std::span<const SpanningTree> trees, AllCycles,
                                    TreeGraphOptions options) {
  return TreeGraphBuilder::build(g, trees, [](const EdgeSet&) { return true; }, options);
}

std::vector<std::size_t> family_fundamental_cycles(const Graph& g, const SpanningTree& t,
                                                   const CycleFamily& family) {
  TreePaths paths(g, t.edges());
  std::vector<std::size_t> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (t.contains(e)) continue;
    if (auto idx = family.index_of(paths.fundamental_cycle(e))) out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ArborealResult is_arboreal(const Graph& g, std::span<const SpanningTree> trees,
                           const CycleFamily& family) {
  const BigInt expected = count_spanning_trees(g);
  if (expected != BigInt(trees.size())) {
    throw Error(ErrorCode::IncompleteTreeList,
                std::to_string(trees.size()) + " trees given, graph has " + expected.str());
  }
  for (TreeId i = 0; i < trees.size(); ++i) {
    const EdgeSet& t = trees[i].edges();
    TreePaths paths(g, t);
    bool hit = false;
    for (EdgeId e = 0; e < g.edge_count() && !hit; ++e) {
      if (!t.test(e) && family.contains(paths.fundamental_cycle(e))) hit = true;
    }
    if (!hit) return {false, i};
  }
  return {true, std::nullopt};
}

bool validate_witness(const Graph& g, const CycleFamily& family, const SpanWitness& w) {
  if (w.sequence.empty()) return false;
  EdgeSet acc = g.empty_set();
  for (std::size_t idx : w.sequence) {
    if (idx >= family.size()) return false;
    acc ^= family[idx];
    if (!is_cycle(g, acc)) return false;
  }
  return acc == w.target;
}

std::optional<SpanWitness> SpanResult::witness(std::size_t cycle) const {
  if (!reached(cycle)) return std::nullopt;
  SpanWitness w{cycles_[cycle], {}};
  for (std::int64_t at = static_cast<std::int64_t>(cycle); at >= 0; at = pred_[static_cast<std::size_t>(at)]) {
    w.sequence.push_back(member_[static_cast<std::size_t>(at)]);
  }
  std::reverse(w.sequence.begin(), w.sequence.end());
  return w;
}

std::optional<std::size_t> SpanResult::first_unreached() const {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (!reached(i)) return i;
  }
  return std::nullopt;
}

std::size_t SpanResult::max_witness_length() const {
  std::size_t best = 0;
  for (std::uint32_t d : depth_) {
    if (d != kUnreached) best = std::max<std::size_t>(best, d + 1);
  }
  return best;
}

SpanResult cyclically_spans(const Graph& g, const CycleFamily& family,
                            std::span<const EdgeSet> all_cycles) {
  SpanResult r;
  r.cycles_.assign(all_cycles.begin(), all_cycles.end());
  const std::size_t count = r.cycles_.size();
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> index;
  index.reserve(count);
  for (std::size_t i = 0; i < count; ++i) index.emplace(r.cycles_[i], i);

  r.pred_.assign(count, -1);
  r.member_.assign(count, 0);
  r.depth_.assign(count, SpanResult::kUnreached);

  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (!is_cycle(g, family[k])) {
      throw Error(ErrorCode::FamilyNotCycles, "member " + std::to_string(k) + " is not a cycle");
    }
    auto it = index.find(family[k]);
    if (it == index.end()) {
      throw Error(ErrorCode::FamilyNotSubsetOfCycles,
                  "member " + std::to_string(k) + " is not among the given cycles");
    }
    if (r.depth_[it->second] == SpanResult::kUnreached) {
      r.depth_[it->second] = 0;
      r.member_[it->second] = static_cast<std::uint32_t>(k);
      queue.push_back(it->second);
      ++r.reached_;
    }
  }
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < family.size(); ++k) {
      const EdgeSet next = r.cycles_[at] ^ family[k];
      auto it = index.find(next);
      if (it == index.end() || r.depth_[it->second] != SpanResult::kUnreached) continue;
      r.depth_[it->second] = r.depth_[at] + 1;
      r.pred_[it->second] = static_cast<std::int64_t>(at);
      r.member_[it->second] = static_cast<std::uint32_t>(k);
      queue.push_back(it->second);
      ++r.reached_;
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (!r.reached(i)) continue;
    if (!validate_witness(g, family, *r.witness(i))) {
      throw Error(ErrorCode::ClaimFailed, "witness for cycle " + std::to_string(i) + " fails re-validation");
    }
  }
  return r;
}

std::vector<ComponentSummary> components_summary(const TreeGraphAdjacency& tg) {
  std::vector<ComponentSummary> out(tg.component_count(), {0, 0});
  auto labels = tg.component_labels();
  for (TreeId i = 0; i < labels.size(); ++i) {
    ComponentSummary& c = out[labels[i]];
    if (c.size++ == 0) c.representative = i;
  }
  std::sort(out.begin(), out.end(), [](const ComponentSummary& a, const ComponentSummary& b) {
    return a.size != b.size ? a.size > b.size : a.representative < b.representative;
  });
  return out;
}

std::vector<TreeId> component_members(const TreeGraphAdjacency& tg, TreeId t) {
  auto labels = tg.component_labels();
  std::vector<TreeId> out;
  for (TreeId i = 0; i < labels.size(); ++i) {
    if (labels[i] == labels[t]) out.push_back(i);
  }
  return out;
}

}  // namespace cyclespan
