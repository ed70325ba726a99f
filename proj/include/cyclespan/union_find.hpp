#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace cyclespan {

// Disjoint sets with path halving and union by size.
template <class Index = std::size_t>
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), Index{0});
    std::fill(size_.begin(), size_.end(), Index{1});
  }

  Index find(Index x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already joined.
  bool unite(Index a, Index b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<Index> parent_;
  std::vector<Index> size_;
};

}  // namespace cyclespan
