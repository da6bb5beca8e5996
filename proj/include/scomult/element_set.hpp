#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace scomult {

/// Index of a ring or module element in canonical order.
using Elem = unsigned;

/// Hard upper bound on carrier sizes; subsets are 64-bit masks.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of a finite carrier (at most 64 elements) stored as a bitmask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Elem;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Elem operator*() const { return static_cast<Elem>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Elem> elems) {
    for (Elem e : elems) insert(e);
  }

  template <typename Range>
  static ElementSet from(const Range& elems) {
    ElementSet out;
    for (auto e : elems) out.insert(static_cast<Elem>(e));
    return out;
  }

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(Elem e) { return ElementSet(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element; undefined on the empty set.
  Elem front() const { return static_cast<Elem>(std::countr_zero(bits_)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Elem> elements() const { return {begin(), end()}; }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists.
inline bool lexicographic_less(ElementSet a, ElementSet b) {
  if (a == b) return false;
  const ElementSet diff = a ^ b;
  const Elem x = diff.front();
  const std::uint64_t above = (x >= 63) ? 0 : (~std::uint64_t{0} << (x + 1));
  if (a.contains(x)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

/// Canonical order: cardinality first, then lexicographic element list.
inline bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lexicographic_less(a, b);
}

struct CanonicalLess {
  bool operator()(ElementSet a, ElementSet b) const { return canonical_less(a, b); }
};

}  // namespace scomult
