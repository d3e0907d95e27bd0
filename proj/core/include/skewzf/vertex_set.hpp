#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace skewzf {

using Vertex = int;

/// Largest graph order the bitset-backed algorithms accept.
inline constexpr int kMaxBitsetOrder = 64;

/// A set of vertices drawn from {0, ..., 63}, stored as a bitmask.
///
/// Ordering compares the underlying masks so sets can be sorted and
/// deduplicated cheaply; it has no combinatorial meaning.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr const_iterator() = default;
    constexpr explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const const_iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) insert(v);
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet from(const std::vector<Vertex>& vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr const_iterator begin() const { return const_iterator(bits_); }
  constexpr const_iterator end() const { return const_iterator(0); }

  std::vector<Vertex> to_vector() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
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

  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// "{0,2,5}"; the empty set prints as "{}".
std::string to_string(VertexSet s);

/// Calls `fn(subset)` for every k-element subset of `pool`, in colex order.
/// Stops early and returns true as soon as `fn` returns true.
template <class Fn>
bool for_each_k_subset(VertexSet pool, int k, Fn&& fn) {
  const auto members = pool.to_vector();
  const int m = static_cast<int>(members.size());
  if (k < 0 || k > m) return false;
  if (k == 0) return fn(VertexSet{});
  // Gosper's hack over positions into `members`.
  std::uint64_t index = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = (m == 64) ? 0 : (std::uint64_t{1} << m);
  while (true) {
    VertexSet subset;
    for (std::uint64_t rest = index; rest != 0; rest &= rest - 1) {
      subset.insert(members[std::countr_zero(rest)]);
    }
    if (fn(subset)) return true;
    const std::uint64_t low = index & (~index + 1);
    const std::uint64_t ripple = index + low;
    if (ripple == 0 || (limit != 0 && ripple >= limit)) break;
    index = (((ripple ^ index) >> 2) / low) | ripple;
    if (limit != 0 && index >= limit) break;
  }
  return false;
}

}  // namespace skewzf
