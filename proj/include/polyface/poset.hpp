#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyface/element_set.hpp"

namespace polyface {

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Cover = std::pair<int, int>;  // (lower, upper)

/// Finite strict partial order on {0..n-1}, kept transitively closed.
///
/// For each element we store the set of elements strictly above and strictly
/// below it, so order queries and closures are a few mask operations.
class Poset {
 public:
  Poset() = default;
  /// Antichain on n elements.
  explicit Poset(int n);

  /// Transitive closure of the given relation pairs (lower < upper).
  /// Throws PosetError on out-of-range indices or a cycle.
  static Poset from_relations(int n, const std::vector<Cover>& pairs);
  /// Same as from_relations; the pairs are meant to be the Hasse covers.
  static Poset from_covers(int n, const std::vector<Cover>& covers) {
    return from_relations(n, covers);
  }

  int size() const { return n_; }
  ElementSet ground() const { return ElementSet::full(n_); }

  bool less(int x, int y) const { return above_[x].contains(y); }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  /// x <= y or y <= x; an element is comparable to itself.
  bool comparable(int x, int y) const { return x == y || less(x, y) || less(y, x); }

  /// Elements strictly above / below x.
  ElementSet above(int x) const { return above_[x]; }
  ElementSet below(int x) const { return below_[x]; }
  /// Elements distinct from x and comparable to it.
  ElementSet neighbours(int x) const { return above_[x] | below_[x]; }

  /// Hasse diagram arcs in lexicographic order.
  std::vector<Cover> covers() const;

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && above_ == other.above_;
  }

 private:
  int n_ = 0;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
};

Poset opposite(const Poset& p);

bool comparable(const Poset& p, int x, int y);
/// a and b incomparable for all a in A, b in B; vacuous on empty sets.
bool sets_parallel(const Poset& p, ElementSet a, ElementSet b);
/// Comparability graph restricted to s is connected; the empty set is not.
bool is_connected(const Poset& p, ElementSet s);
bool is_order_convex(const Poset& p, ElementSet s);

ElementSet min_of(const Poset& p, ElementSet s);
ElementSet max_of(const Poset& p, ElementSet s);
ElementSet up_closure(const Poset& p, ElementSet s);
ElementSet down_closure(const Poset& p, ElementSet s);

bool is_filter(const Poset& p, ElementSet s);
bool is_ideal(const Poset& p, ElementSet s);
bool is_antichain(const Poset& p, ElementSet s);

/// Sorted by bitmask.
std::vector<ElementSet> enumerate_filters(const Poset& p);
std::vector<ElementSet> enumerate_antichains(const Poset& p);

ElementSet antichain_to_filter(const Poset& p, ElementSet antichain);
ElementSet filter_to_antichain(const Poset& p, ElementSet filter);

/// Largest chain contained in s; 0 for the empty set.
int height(const Poset& p, ElementSet s);

/// P/J for a filter or ideal J.
///
/// Elements outside J keep their relative order and occupy quotient indices
/// 0..n-|J|-1; the collapsed block, when J is non-empty, is the last index.
struct Contraction {
  Poset quotient;
  std::vector<int> class_of;  // original element -> quotient element
  std::optional<int> vj;

  /// S/J
  ElementSet image(ElementSet s) const;
};

Contraction contract(const Poset& p, ElementSet j);

/// Induced subposet on P \ S, relabelled densely in increasing order.
struct Deletion {
  Poset poset;
  std::vector<int> old_of_new;
  std::vector<int> new_of_old;  // -1 for deleted elements

  ElementSet to_new(ElementSet s) const;  // drops deleted members
  ElementSet to_old(ElementSet s) const;
};

Deletion delete_elements(const Poset& p, ElementSet s);
/// Induced subposet on s (deletes the complement).
Deletion induced(const Poset& p, ElementSet s);

/// No d1 || d2 and u1 || u2 with d_i < e < u_j.
bool is_x_free(const Poset& p);

/// Connected, order-convex subsets of height >= min_height, by bitmask.
std::vector<ElementSet> connected_order_convex_subposets(const Poset& p, int min_height);

}  // namespace polyface
