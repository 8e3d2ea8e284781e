#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace polyface {

/// Subset of a poset's ground set {0..n-1}, stored as a bitmask.
///
/// Ordering compares the raw bitmask, which is the "lexicographic on bitmask"
/// order used by every enumeration in the library.
class ElementSet {
 public:
  static constexpr int kMaxElements = 32;
  using Mask = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> members) {
    for (int x : members) insert(x);
  }

  static ElementSet from_vector(const std::vector<int>& members) {
    ElementSet s;
    for (int x : members) s.insert(x);
    return s;
  }
  /// {0, ..., n-1}
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= kMaxElements ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr ElementSet single(int x) { return ElementSet(Mask{1} << x); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(int x) { bits_ |= Mask{1} << x; }
  constexpr void erase(int x) { bits_ &= ~(Mask{1} << x); }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const ElementSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  /// "{0,2,3}"
  std::string to_string() const;

 private:
  Mask bits_ = 0;
};

}  // namespace polyface
