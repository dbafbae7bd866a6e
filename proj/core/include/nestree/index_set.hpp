#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nestree/error.hpp"

namespace nestree {

// Fixed-universe bit vector. The tag keeps vertex sets and edge sets apart at
// compile time; both are plain values with cheap copies for desk-scale graphs.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe)
      : universe_(universe), words_((static_cast<size_t>(universe) + 63) / 64, 0) {}

  static IndexSet from_indices(int universe, std::span<const int> indices) {
    IndexSet s(universe);
    for (int i : indices) s.set(i);
    return s;
  }
  static IndexSet full(int universe) {
    IndexSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1U;
  }
  void set(int i) {
    check_index(i);
    words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    check_index(i);
    words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void flip(int i) {
    check_index(i);
    words_[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63);
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Smallest member, or -1.
  int first() const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    return -1;
  }

  IndexSet& operator|=(const IndexSet& o) {
    check_same(o);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    check_same(o);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  IndexSet& operator^=(const IndexSet& o) {
    check_same(o);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    check_same(o);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet c = full(universe_);
    c -= *this;
    return c;
  }

  bool is_subset_of(const IndexSet& o) const {
    check_same(o);
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const IndexSet& o) const {
    check_same(o);
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w != 0) {
        f(static_cast<int>(k * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  // Total order: the set owning the smallest element of the symmetric
  // difference comes first.
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    for (size_t k = 0; k < a.words_.size(); ++k) {
      const uint64_t x = a.words_[k] ^ b.words_[k];
      if (x == 0) continue;
      const uint64_t low = x & (~x + 1);
      // The set holding the lowest differing element comes first.
      return (a.words_[k] & low) != 0;
    }
    return false;
  }

  size_t hash() const {
    size_t h = std::hash<int>{}(universe_);
    for (uint64_t w : words_) h = h * 1099511628211ULL ^ std::hash<uint64_t>{}(w);
    return h;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= universe_) throw InputError("index out of range of set universe");
  }
  void check_same(const IndexSet& o) const {
    if (o.universe_ != universe_) throw InputError("host mismatch: sets over different universes");
  }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

using VertexSet = IndexSet<struct VertexTag>;
using EdgeSet = IndexSet<struct EdgeTag>;

struct IndexSetHash {
  template <class Tag>
  size_t operator()(const IndexSet<Tag>& s) const { return s.hash(); }
};

}  // namespace nestree
