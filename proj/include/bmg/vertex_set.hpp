#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace bmg {

/// Vertices are labelled 1..n, matching the `<n|[i,j],...>` notation.
using Vertex = int;

/// Fixed-capacity set of vertex labels 1..63 backed by one machine word.
/// Bit v holds vertex v; bit 0 is never set.
class VertexSet {
 public:
  static constexpr Vertex kMaxVertex = 63;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits & ~std::uint64_t{1}) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// All labels in [first, last].
  static constexpr VertexSet range(Vertex first, Vertex last) {
    VertexSet s;
    for (Vertex v = first; v <= last; ++v) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> v) & 1U) != 0;
  }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  constexpr Vertex back() const { return 63 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace bmg
