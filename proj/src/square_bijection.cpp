#include "polyface/square_bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyface {

namespace {

ElementSet extremes(const Poset& p, ElementSet s) { return min_of(p, s) | max_of(p, s); }

}  // namespace

CSquareSpec phi_map(const Poset& p, const OSquareSpec& s) {
  if (!is_o_square(p, s)) {
    throw std::invalid_argument("not a square of O(P): {" + s.f1.to_string() + ", " +
                                s.f2.to_string() + "}");
  }
  const ElementSet q = extremes(p, s.f1 - s.f2);
  const ElementSet r = extremes(p, s.f2 - s.f1);
  ElementSet rest;
  for (int x : min_of(p, s.f1 & s.f2)) {
    if (!p.neighbours(x).intersects(q | r)) rest.insert(x);
  }
  return CSquareSpec::make(p, q, r, rest);
}

OSquareSpec psi_map(const Poset& p, const CSquareSpec& s) {
  if (!is_c_square(p, s)) {
    throw std::invalid_argument("not a square of C(P): Q=" + s.q.to_string() +
                                " R=" + s.r.to_string() + " S=" + s.s.to_string());
  }
  const ElementSet up_s = up_closure(p, s.s);
  const ElementSet up_q = up_closure(p, s.q);
  const ElementSet up_r = up_closure(p, s.r);
  const ElementSet f1 = up_q | up_s | (up_r - down_closure(p, s.r));
  const ElementSet f2 = up_r | up_s | (up_q - down_closure(p, s.q));
  return OSquareSpec::make(f1, f2);
}

BijectionReport verify_bijection(const Poset& p) {
  BijectionReport report;
  if (p.size() <= 2) return report;

  const auto o_list = o_squares(p);
  const auto c_list = c_squares(p);
  report.count_o = static_cast<std::int64_t>(o_list.size());
  report.count_c = static_cast<std::int64_t>(c_list.size());

  for (const auto& o : o_list) {
    const CSquareSpec c = phi_map(p, o);
    report.pairs.push_back({o, c});
    if (!is_c_square(p, c) || !std::binary_search(c_list.begin(), c_list.end(), c) ||
        psi_map(p, c) != o) {
      ++report.roundtrip_failures;
    }
  }
  for (const auto& c : c_list) {
    const OSquareSpec o = psi_map(p, c);
    if (!is_o_square(p, o) || !std::binary_search(o_list.begin(), o_list.end(), o) ||
        phi_map(p, o) != c) {
      ++report.roundtrip_failures;
    }
  }
  return report;
}

}  // namespace polyface
