#include "cyclespan/edge_set.hpp"

#include <string>

#include "cyclespan/error.hpp"

namespace cyclespan {

EdgeSet::EdgeSet(std::size_t capacity) : capacity_(static_cast<std::uint32_t>(capacity)) {
  if (capacity > kMaxCapacity) {
    throw Error(ErrorCode::CapacityExceeded,
                "edge set capacity " + std::to_string(capacity) + " exceeds " +
                    std::to_string(kMaxCapacity));
  }
}

EdgeSet::EdgeSet(std::size_t capacity, std::initializer_list<EdgeId> ids)
    : EdgeSet(capacity, std::span<const EdgeId>(ids.begin(), ids.size())) {}

EdgeSet::EdgeSet(std::size_t capacity, std::span<const EdgeId> ids) : EdgeSet(capacity) {
  for (EdgeId e : ids) {
    if (e >= capacity) {
      throw Error(ErrorCode::CapacityMismatch,
                  "edge id " + std::to_string(e) + " outside capacity " + std::to_string(capacity));
    }
    set(e);
  }
}

void EdgeSet::check_same_capacity(const EdgeSet& other) const {
  if (capacity_ != other.capacity_) {
    throw Error(ErrorCode::CapacityMismatch, "edge sets of capacity " + std::to_string(capacity_) +
                                                 " and " + std::to_string(other.capacity_));
  }
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  check_same_capacity(other);
  for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= other.words_[w];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  check_same_capacity(other);
  for (std::size_t w = 0; w < kWords; ++w) words_[w] &= other.words_[w];
  return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  check_same_capacity(other);
  for (std::size_t w = 0; w < kWords; ++w) words_[w] |= other.words_[w];
  return *this;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  check_same_capacity(other);
  for (std::size_t w = 0; w < kWords; ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  check_same_capacity(other);
  for (std::size_t w = 0; w < kWords; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count());
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

EdgeSet EdgeSet::widened(std::size_t capacity) const {
  if (capacity < capacity_) {
    throw Error(ErrorCode::CapacityMismatch, "cannot narrow an edge set");
  }
  EdgeSet out(capacity);
  out.words_ = words_;
  return out;
}

EdgeSet EdgeSet::truncated(std::size_t capacity) const {
  if (capacity > capacity_) {
    throw Error(ErrorCode::CapacityMismatch, "cannot truncate to a larger capacity");
  }
  EdgeSet out(capacity);
  for_each([&](EdgeId e) {
    if (e < capacity) out.set(e);
  });
  return out;
}

std::size_t EdgeSet::hash() const noexcept {
  // splitmix64 finalizer over both words
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return static_cast<std::size_t>(mix(words_[0] ^ mix(words_[1] ^ capacity_)));
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

}  // namespace cyclespan
