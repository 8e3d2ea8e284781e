#include "polyface/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polyface {

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int x : *this) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

Poset::Poset(int n) : n_(n), above_(n), below_(n) {
  if (n < 0 || n > ElementSet::kMaxElements) {
    throw PosetError("poset size out of range: " + std::to_string(n));
  }
}

Poset Poset::from_relations(int n, const std::vector<Cover>& pairs) {
  Poset p(n);
  for (auto [lo, hi] : pairs) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n) {
      throw PosetError("relation (" + std::to_string(lo) + "," + std::to_string(hi) +
                       ") references an element outside 0.." + std::to_string(n - 1));
    }
    if (lo == hi) throw PosetError("cycle: element " + std::to_string(lo) + " below itself");
    p.above_[lo].insert(hi);
  }
  // Warshall on rows: if k is above i, everything above k is above i.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (p.above_[i].contains(k)) p.above_[i] |= p.above_[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p.above_[i].contains(i)) {
      throw PosetError("cycle through element " + std::to_string(i));
    }
    for (int j : p.above_[i]) p.below_[j].insert(i);
  }
  return p;
}

std::vector<Cover> Poset::covers() const {
  std::vector<Cover> out;
  for (int x = 0; x < n_; ++x) {
    for (int y : above_[x]) {
      if (!(above_[x] & below_[y]).empty()) continue;
      out.emplace_back(x, y);
    }
  }
  return out;
}

Poset opposite(const Poset& p) {
  std::vector<Cover> rel;
  for (int x = 0; x < p.size(); ++x) {
    for (int y : p.above(x)) rel.emplace_back(y, x);
  }
  return Poset::from_relations(p.size(), rel);
}

bool comparable(const Poset& p, int x, int y) { return p.comparable(x, y); }

bool sets_parallel(const Poset& p, ElementSet a, ElementSet b) {
  if (a.intersects(b)) return false;
  for (int x : a) {
    if (p.neighbours(x).intersects(b)) return false;
  }
  return true;
}

bool is_connected(const Poset& p, ElementSet s) {
  if (s.empty()) return false;
  ElementSet seen = ElementSet::single(s.first());
  ElementSet frontier = seen;
  while (!frontier.empty()) {
    ElementSet next;
    for (int x : frontier) next |= p.neighbours(x) & s;
    frontier = next - seen;
    seen |= next;
  }
  return seen == s;
}

bool is_order_convex(const Poset& p, ElementSet s) {
  for (int y : p.ground() - s) {
    if (p.below(y).intersects(s) && p.above(y).intersects(s)) return false;
  }
  return true;
}

ElementSet min_of(const Poset& p, ElementSet s) {
  ElementSet out;
  for (int x : s) {
    if (!p.below(x).intersects(s)) out.insert(x);
  }
  return out;
}

ElementSet max_of(const Poset& p, ElementSet s) {
  ElementSet out;
  for (int x : s) {
    if (!p.above(x).intersects(s)) out.insert(x);
  }
  return out;
}

ElementSet up_closure(const Poset& p, ElementSet s) {
  ElementSet out = s;
  for (int x : s) out |= p.above(x);
  return out;
}

ElementSet down_closure(const Poset& p, ElementSet s) {
  ElementSet out = s;
  for (int x : s) out |= p.below(x);
  return out;
}

bool is_filter(const Poset& p, ElementSet s) { return up_closure(p, s) == s; }
bool is_ideal(const Poset& p, ElementSet s) { return down_closure(p, s) == s; }

bool is_antichain(const Poset& p, ElementSet s) {
  for (int x : s) {
    if (p.neighbours(x).intersects(s)) return false;
  }
  return true;
}

namespace {

template <class Pred>
std::vector<ElementSet> subsets_where(const Poset& p, Pred pred) {
  std::vector<ElementSet> out;
  const ElementSet::Mask limit = p.ground().bits();
  for (ElementSet::Mask m = 0;; ++m) {
    if (pred(ElementSet(m))) out.emplace_back(m);
    if (m == limit) break;
  }
  return out;
}

}  // namespace

std::vector<ElementSet> enumerate_filters(const Poset& p) {
  return subsets_where(p, [&](ElementSet s) { return is_filter(p, s); });
}

std::vector<ElementSet> enumerate_antichains(const Poset& p) {
  return subsets_where(p, [&](ElementSet s) { return is_antichain(p, s); });
}

ElementSet antichain_to_filter(const Poset& p, ElementSet antichain) {
  if (!is_antichain(p, antichain)) throw PosetError("not an antichain: " + antichain.to_string());
  return up_closure(p, antichain);
}

ElementSet filter_to_antichain(const Poset& p, ElementSet filter) {
  if (!is_filter(p, filter)) throw PosetError("not a filter: " + filter.to_string());
  return min_of(p, filter);
}

int height(const Poset& p, ElementSet s) {
  // If y < x then below(y) is a proper subset of below(x), so sorting by
  // |below| gives a linear extension.
  std::vector<int> order = s.to_vector();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.below(a).size() < p.below(b).size(); });
  std::vector<int> longest(p.size(), 0);
  int best = 0;
  for (int x : order) {
    int h = 1;
    for (int y : p.below(x) & s) h = std::max(h, longest[y] + 1);
    longest[x] = h;
    best = std::max(best, h);
  }
  return best;
}

ElementSet Contraction::image(ElementSet s) const {
  ElementSet out;
  for (int x : s) out.insert(class_of[x]);
  return out;
}

Contraction contract(const Poset& p, ElementSet j) {
  if (!j.subset_of(p.ground())) throw PosetError("contraction block outside ground set");
  if (!is_filter(p, j) && !is_ideal(p, j)) {
    throw PosetError("can only contract by a filter or an ideal, got " + j.to_string());
  }
  Contraction c;
  c.class_of.assign(p.size(), -1);
  int next = 0;
  for (int x : p.ground() - j) c.class_of[x] = next++;
  if (!j.empty()) {
    c.vj = next;
    for (int x : j) c.class_of[x] = next;
    ++next;
  }
  std::vector<Cover> rel;
  for (int x = 0; x < p.size(); ++x) {
    for (int y : p.above(x)) {
      const int cx = c.class_of[x];
      const int cy = c.class_of[y];
      if (cx != cy) rel.emplace_back(cx, cy);
    }
  }
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  c.quotient = Poset::from_relations(next, rel);
  return c;
}

ElementSet Deletion::to_new(ElementSet s) const {
  ElementSet out;
  for (int x : s) {
    if (new_of_old[x] >= 0) out.insert(new_of_old[x]);
  }
  return out;
}

ElementSet Deletion::to_old(ElementSet s) const {
  ElementSet out;
  for (int x : s) out.insert(old_of_new[x]);
  return out;
}

Deletion delete_elements(const Poset& p, ElementSet s) {
  Deletion d;
  d.new_of_old.assign(p.size(), -1);
  for (int x : p.ground() - s) {
    d.new_of_old[x] = static_cast<int>(d.old_of_new.size());
    d.old_of_new.push_back(x);
  }
  std::vector<Cover> rel;
  for (int x : p.ground() - s) {
    for (int y : p.above(x) - s) rel.emplace_back(d.new_of_old[x], d.new_of_old[y]);
  }
  d.poset = Poset::from_relations(static_cast<int>(d.old_of_new.size()), rel);
  return d;
}

Deletion induced(const Poset& p, ElementSet s) { return delete_elements(p, p.ground() - s); }

namespace {

bool is_chain(const Poset& p, ElementSet s) {
  for (int x : s) {
    if (!(s - ElementSet::single(x)).subset_of(p.neighbours(x))) return false;
  }
  return true;
}

}  // namespace

bool is_x_free(const Poset& p) {
  // d_i < e < u_j already gives d_i < u_j, so an X exists iff some e has an
  // incomparable pair strictly below it and another strictly above it.
  for (int e = 0; e < p.size(); ++e) {
    if (!is_chain(p, p.below(e)) && !is_chain(p, p.above(e))) return false;
  }
  return true;
}

std::vector<ElementSet> connected_order_convex_subposets(const Poset& p, int min_height) {
  return subsets_where(p, [&](ElementSet s) {
    return is_connected(p, s) && is_order_convex(p, s) && height(p, s) >= min_height;
  });
}

}  // namespace polyface
