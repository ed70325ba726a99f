#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace cyclespan {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Fixed-capacity bit vector indexed by edge id: an element of the GF(2) edge
// space of one graph. Capacity is set at construction and never grows; sets of
// different capacity never mix (operations throw CapacityMismatch).
//
// Storage is inline (two words), so every graph handled by the library has at
// most kMaxCapacity edges. The layered octahedra up to G_3 fit comfortably.
class EdgeSet {
 public:
  static constexpr std::size_t kWords = 2;
  static constexpr std::size_t kMaxCapacity = 64 * kWords;

  EdgeSet() = default;
  explicit EdgeSet(std::size_t capacity);
  EdgeSet(std::size_t capacity, std::initializer_list<EdgeId> ids);
  EdgeSet(std::size_t capacity, std::span<const EdgeId> ids);

  std::size_t capacity() const noexcept { return capacity_; }

  bool test(EdgeId e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void set(EdgeId e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(EdgeId e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  void flip(EdgeId e) noexcept { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }

  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  bool empty() const noexcept { return (words_[0] | words_[1]) == 0; }

  EdgeSet& operator^=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& operator|=(const EdgeSet& other);

  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }

  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;

  // Ascending edge ids.
  std::vector<EdgeId> ids() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  // Same bits reinterpreted against a graph with a larger edge count (used
  // when an inner layer's edges are a prefix of the outer graph's edges).
  EdgeSet widened(std::size_t capacity) const;
  // Keeps only edge ids below `capacity` (the inverse direction).
  EdgeSet truncated(std::size_t capacity) const;

  const std::array<std::uint64_t, kWords>& words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  // Canonical order: the bit pattern read as an unsigned integer with edge id
  // i weighted 2^i. Capacity breaks ties so the order stays total.
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) noexcept {
    for (std::size_t w = kWords; w-- > 0;) {
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    }
    return a.capacity_ <=> b.capacity_;
  }

 private:
  void check_same_capacity(const EdgeSet& other) const;

  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t capacity_ = 0;
};

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept { return s.hash(); }
};

}  // namespace cyclespan
