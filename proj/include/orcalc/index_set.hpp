// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace orcalc {

/// Fixed-width bitset over the vertex or edge indices of one graph.
///
/// The carrier size is part of the value: two sets over graphs of different
/// sizes never compare equal. Graphs handled here are desk-scale, so the
/// width is capped at 64.
template <class Tag>
class IndexSet {
 public:
  static constexpr int kMaxSize = 64;

  IndexSet() = default;
  explicit IndexSet(int size) : size_(size) {
    if (size < 0 || size > kMaxSize) {
      throw std::length_error("IndexSet: carrier size " + std::to_string(size) +
                              " outside [0, 64]");
    }
  }
  IndexSet(int size, std::initializer_list<int> members) : IndexSet(size) {
    for (int i : members) insert(i);
  }
  IndexSet(int size, const std::vector<int>& members) : IndexSet(size) {
    for (int i : members) insert(i);
  }

  static IndexSet full(int size) {
    IndexSet s(size);
    s.bits_ = size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
    return s;
  }
  static IndexSet from_bits(int size, std::uint64_t bits) {
    IndexSet s(size);
    s.bits_ = bits & full(size).bits_;
    return s;
  }

  int size() const { return size_; }
  std::uint64_t bits() const { return bits_; }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int i) const {
    return i >= 0 && i < size_ && ((bits_ >> i) & 1U) != 0;
  }
  void insert(int i) {
    check_index(i);
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(int i) {
    check_index(i);
    bits_ &= ~(std::uint64_t{1} << i);
  }

  IndexSet complement() const { return from_bits(size_, ~bits_); }
  bool subset_of(const IndexSet& other) const {
    check_same(other);
    return (bits_ & ~other.bits_) == 0;
  }

  IndexSet operator|(const IndexSet& o) const {
    check_same(o);
    return from_bits(size_, bits_ | o.bits_);
  }
  IndexSet operator&(const IndexSet& o) const {
    check_same(o);
    return from_bits(size_, bits_ & o.bits_);
  }
  IndexSet operator-(const IndexSet& o) const {
    check_same(o);
    return from_bits(size_, bits_ & ~o.bits_);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  /// Smallest member, or -1 when empty.
  int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.to_vector() <=> b.to_vector();
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= size_) {
      throw std::out_of_range("IndexSet: index " + std::to_string(i) +
                              " outside carrier of size " + std::to_string(size_));
    }
  }
  void check_same(const IndexSet& o) const {
    if (o.size_ != size_) {
      throw std::domain_error("IndexSet: carrier size mismatch");
    }
  }

  std::uint64_t bits_ = 0;
  int size_ = 0;
};

struct VertexTag {};
struct EdgeTag {};
using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

/// Calls `fn(subset)` for every subset of `universe`, in increasing bit order.
template <class Tag, class Fn>
void for_each_subset(const IndexSet<Tag>& universe, Fn&& fn) {
  const std::uint64_t mask = universe.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(IndexSet<Tag>::from_bits(universe.size(), sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace orcalc
