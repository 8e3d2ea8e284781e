#include "polyface/face_census.hpp"

#include <algorithm>

namespace polyface {

std::string to_string(Polytope kind) { return kind == Polytope::Order ? "O" : "C"; }

Polytope polytope_from_string(const std::string& s) {
  if (s == "O" || s == "o" || s == "order") return Polytope::Order;
  if (s == "C" || s == "c" || s == "chain") return Polytope::Chain;
  throw std::invalid_argument("unknown polytope '" + s + "', expected O or C");
}

std::vector<ElementSet> OSquareSpec::vertices() const {
  std::vector<ElementSet> v{f1 & f2, f1, f2, f1 | f2};
  std::sort(v.begin(), v.end());
  return v;
}

CSquareSpec CSquareSpec::make(const Poset& p, ElementSet q, ElementSet r, ElementSet s) {
  if (r < q) std::swap(q, r);
  CSquareSpec spec{q, r, s, {}, {}, {}, {}};
  auto split = [&](ElementSet part, ElementSet& lo, ElementSet& hi) {
    if (height(p, part) >= 2) {
      lo = min_of(p, part);
      hi = max_of(p, part);
    } else {
      lo = ElementSet{};
      hi = part;
    }
  };
  split(q, spec.q1, spec.q2);
  split(r, spec.r1, spec.r2);
  return spec;
}

std::vector<ElementSet> CSquareSpec::vertices() const {
  std::vector<ElementSet> v{q1 | r1 | s, q1 | r2 | s, q2 | r1 | s, q2 | r2 | s};
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<ElementSet> vertex_labels(const Poset& p, Polytope kind) {
  return kind == Polytope::Order ? enumerate_filters(p) : enumerate_antichains(p);
}

std::vector<Edge> o_edges(const Poset& p) {
  const auto filters = enumerate_filters(p);
  std::vector<Edge> out;
  for (ElementSet f : filters) {
    for (ElementSet g : filters) {
      if (f != g && f.subset_of(g) && is_connected(p, g - f)) out.emplace_back(f, g);
    }
  }
  return out;
}

std::vector<Edge> c_edges(const Poset& p) {
  const auto antichains = enumerate_antichains(p);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < antichains.size(); ++i) {
    for (std::size_t j = i + 1; j < antichains.size(); ++j) {
      if (is_connected(p, antichains[i] ^ antichains[j])) out.emplace_back(antichains[i], antichains[j]);
    }
  }
  return out;
}

std::vector<Triangle> o_triangles(const Poset& p) {
  const auto filters = enumerate_filters(p);
  std::vector<Triangle> out;
  for (ElementSet f : filters) {
    for (ElementSet g : filters) {
      if (g == f || !f.subset_of(g) || !is_connected(p, g - f)) continue;
      for (ElementSet h : filters) {
        if (h == g || !g.subset_of(h)) continue;
        if (is_connected(p, h - g) && is_connected(p, h - f)) out.push_back({f, g, h});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_c_triangle(const Poset& p, ElementSet a, ElementSet b, ElementSet c) {
  if (a == b || b == c || a == c) return false;
  for (ElementSet s : {a, b, c}) {
    if (!s.subset_of(p.ground()) || !is_antichain(p, s)) return false;
  }
  return is_connected(p, a ^ b) && is_connected(p, b ^ c) && is_connected(p, c ^ a);
}

Triangle normalize_c_triangle(const Poset& p, ElementSet a, ElementSet b, ElementSet c) {
  if (!is_c_triangle(p, a, b, c)) {
    throw std::invalid_argument("not a triangle of C(P): " + a.to_string() + " " + b.to_string() +
                                " " + c.to_string());
  }
  const ElementSet all = a | b | c;
  const ElementSet lo = min_of(p, all);
  const ElementSet hi = max_of(p, all);
  std::vector<ElementSet> rest{a, b, c};
  auto take = [&](ElementSet want) {
    auto it = std::find(rest.begin(), rest.end(), want);
    if (it == rest.end()) {
      throw std::logic_error("triangle without min/max antichain: " + want.to_string());
    }
    rest.erase(it);
    return want;
  };
  const ElementSet first = take(lo);
  const ElementSet last = take(hi);
  return {first, rest.front(), last};
}

std::vector<Triangle> c_triangles(const Poset& p) {
  const auto antichains = enumerate_antichains(p);
  const std::size_t m = antichains.size();
  std::vector<std::vector<bool>> adjacent(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      adjacent[i][j] = adjacent[j][i] = is_connected(p, antichains[i] ^ antichains[j]);
    }
  }
  std::vector<Triangle> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!adjacent[i][j]) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (adjacent[i][k] && adjacent[j][k]) {
          out.push_back(normalize_c_triangle(p, antichains[i], antichains[j], antichains[k]));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_triangle_base(const Poset& p, ElementSet q, ElementSet w) {
  return q.subset_of(p.ground()) && w.subset_of(p.ground()) && is_connected(p, q) &&
         is_order_convex(p, q) && height(p, q) >= 2 && is_antichain(p, w) &&
         sets_parallel(p, w, q);
}

// Filters of the induced subposet on q, as subsets of the ambient ground set.
bool is_filter_within(const Poset& p, ElementSet q, ElementSet g) {
  return g.subset_of(q) && (up_closure(p, g) & q) == g;
}

std::vector<ElementSet> antichains_parallel_to(const Poset& p, ElementSet q) {
  std::vector<ElementSet> out;
  for (ElementSet w : enumerate_antichains(p)) {
    if (sets_parallel(p, w, q)) out.push_back(w);
  }
  return out;
}

std::vector<ElementSet> subsets_of(ElementSet s) {
  // Standard submask walk, emitted in increasing order.
  std::vector<ElementSet> out;
  ElementSet::Mask m = 0;
  do {
    out.emplace_back(m);
    m = (m - s.bits()) & s.bits();
  } while (m != 0);
  return out;
}

}  // namespace

bool is_o_triangle_triple(const Poset& p, const OTriangleTriple& t) {
  return is_triangle_base(p, t.q, t.w) && is_filter_within(p, t.q, t.g) &&
         is_connected(p, t.g) && is_connected(p, t.q - t.g);
}

bool is_c_triangle_triple(const Poset& p, const CTriangleTriple& t) {
  return is_triangle_base(p, t.q, t.w) && t.b.subset_of(t.q) && is_antichain(p, t.b) &&
         is_connected(p, t.b ^ min_of(p, t.q)) && is_connected(p, t.b ^ max_of(p, t.q));
}

std::vector<OTriangleTriple> o_triangle_params(const Poset& p) {
  std::vector<OTriangleTriple> out;
  for (ElementSet q : connected_order_convex_subposets(p, 2)) {
    const auto ws = antichains_parallel_to(p, q);
    for (ElementSet g : subsets_of(q)) {
      if (!is_filter_within(p, q, g) || !is_connected(p, g) || !is_connected(p, q - g)) continue;
      for (ElementSet w : ws) out.push_back({q, w, g});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CTriangleTriple> c_triangle_params(const Poset& p) {
  std::vector<CTriangleTriple> out;
  for (ElementSet q : connected_order_convex_subposets(p, 2)) {
    const auto ws = antichains_parallel_to(p, q);
    const ElementSet lo = min_of(p, q);
    const ElementSet hi = max_of(p, q);
    for (ElementSet b : subsets_of(q)) {
      if (!is_antichain(p, b) || !is_connected(p, b ^ lo) || !is_connected(p, b ^ hi)) continue;
      for (ElementSet w : ws) out.push_back({q, w, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Triangle map_o_triple(const Poset& p, const OTriangleTriple& t) {
  if (!is_o_triangle_triple(p, t)) {
    throw std::invalid_argument("invalid (Q,W,G) triple: Q=" + t.q.to_string() +
                                " W=" + t.w.to_string() + " G=" + t.g.to_string());
  }
  const ElementSet h = up_closure(p, t.q | t.w);
  const ElementSet f = h - t.q;
  return {f, f | t.g, h};
}

Triangle map_c_triple(const Poset& p, const CTriangleTriple& t) {
  if (!is_c_triangle_triple(p, t)) {
    throw std::invalid_argument("invalid (Q,W,B) triple: Q=" + t.q.to_string() +
                                " W=" + t.w.to_string() + " B=" + t.b.to_string());
  }
  return {t.w | min_of(p, t.q), t.w | t.b, t.w | max_of(p, t.q)};
}

bool is_o_square(const Poset& p, const OSquareSpec& s) {
  return s.f1.subset_of(p.ground()) && s.f2.subset_of(p.ground()) && is_filter(p, s.f1) &&
         is_filter(p, s.f2) && is_connected(p, s.f1 - s.f2) && is_connected(p, s.f2 - s.f1);
}

namespace {

// Connected and a disjoint union of two antichains.
bool is_square_part(const Poset& p, ElementSet part) {
  return is_connected(p, part) && height(p, part) <= 2;
}

}  // namespace

bool is_c_square(const Poset& p, const CSquareSpec& s) {
  const ElementSet g = p.ground();
  if (!s.q.subset_of(g) || !s.r.subset_of(g) || !s.s.subset_of(g)) return false;
  if (!is_square_part(p, s.q) || !is_square_part(p, s.r) || !is_antichain(p, s.s)) return false;
  if (!sets_parallel(p, s.q, s.r) || !sets_parallel(p, s.q, s.s) || !sets_parallel(p, s.r, s.s)) {
    return false;
  }
  const CSquareSpec canon = CSquareSpec::make(p, s.q, s.r, s.s);
  return canon.q == s.q && canon.q1 == s.q1 && canon.q2 == s.q2 && canon.r1 == s.r1 &&
         canon.r2 == s.r2;
}

std::vector<OSquareSpec> o_squares(const Poset& p) {
  const auto filters = enumerate_filters(p);
  std::vector<OSquareSpec> out;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    for (std::size_t j = i + 1; j < filters.size(); ++j) {
      const ElementSet a = filters[i];
      const ElementSet b = filters[j];
      if (is_connected(p, a - b) && is_connected(p, b - a)) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<CSquareSpec> c_squares(const Poset& p) {
  std::vector<ElementSet> parts;
  const ElementSet::Mask limit = p.ground().bits();
  for (ElementSet::Mask m = 1; m <= limit && m != 0; ++m) {
    if (is_square_part(p, ElementSet(m))) parts.emplace_back(m);
  }
  const auto antichains = enumerate_antichains(p);
  std::vector<CSquareSpec> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const ElementSet q = parts[i];
      const ElementSet r = parts[j];
      if (!sets_parallel(p, q, r)) continue;
      for (ElementSet s : antichains) {
        if (sets_parallel(p, s, q | r)) out.push_back(CSquareSpec::make(p, q, r, s));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FVector2 f_vector2(const Poset& p, Polytope kind) {
  const int d = p.size();
  const bool order = kind == Polytope::Order;
  FVector2 f;
  if (d > 0) f.f0 = static_cast<std::int64_t>(vertex_labels(p, kind).size());
  if (d > 1) f.f1 = static_cast<std::int64_t>(order ? o_edges(p).size() : c_edges(p).size());
  if (d > 2) {
    f.f2_tri = static_cast<std::int64_t>(order ? o_triangles(p).size() : c_triangles(p).size());
    f.f2_sq = static_cast<std::int64_t>(order ? o_squares(p).size() : c_squares(p).size());
  }
  return f;
}

namespace {

void require_extremal(const Poset& q, ElementSet x, ElementSet y) {
  if (!x.subset_of(max_of(q, q.ground()))) {
    throw std::invalid_argument("X=" + x.to_string() + " is not a set of maximal elements");
  }
  if (!y.subset_of(min_of(q, q.ground()))) {
    throw std::invalid_argument("Y=" + y.to_string() + " is not a set of minimal elements");
  }
}

}  // namespace

std::int64_t phi(const Poset& q, ElementSet x, ElementSet y) {
  require_extremal(q, x, y);
  const ElementSet all = q.ground();
  const ElementSet hi = max_of(q, all);
  const ElementSet lo = min_of(q, all);
  std::int64_t count = 0;
  for (ElementSet g : enumerate_filters(q)) {
    if (((all - g) & hi) != x || (g & lo) != y) continue;
    if (is_connected(q, g) && is_connected(q, all - g)) ++count;
  }
  return count;
}

std::int64_t alpha(const Poset& q, ElementSet x, ElementSet y) {
  require_extremal(q, x, y);
  const ElementSet all = q.ground();
  const ElementSet hi = max_of(q, all);
  const ElementSet lo = min_of(q, all);
  std::int64_t count = 0;
  for (ElementSet b : enumerate_antichains(q)) {
    if ((b & hi) != x || (b & lo) != y) continue;
    if (is_connected(q, b ^ lo) && is_connected(q, b ^ hi)) ++count;
  }
  return count;
}

std::optional<std::string> recursion_setup_error(const Poset& q, ElementSet x, ElementSet y, int e) {
  if (e < 0 || e >= q.size()) return "element " + std::to_string(e) + " outside Q";
  if (!x.subset_of(q.ground()) || !y.subset_of(q.ground())) return "X or Y outside Q";
  if (!is_connected(q, q.ground())) return "Q is not connected";
  const ElementSet lo = min_of(q, q.ground());
  const ElementSet hi = max_of(q, q.ground());
  if (lo.contains(e) || hi.contains(e)) return "e=" + std::to_string(e) + " is extremal in Q";
  if (!x.subset_of(hi)) return "X is not a set of maximal elements";
  if (!y.subset_of(lo)) return "Y is not a set of minimal elements";
  const ElementSet e_set = ElementSet::single(e);
  if (!sets_parallel(q, e_set, x)) return "e is comparable to an element of X";
  if (!sets_parallel(q, e_set, y)) return "e is comparable to an element of Y";
  if (!sets_parallel(q, x, y)) return "X and Y are not parallel";
  return std::nullopt;
}

RecursionSetup make_recursion_setup(const Poset& q, ElementSet x, ElementSet y, int e) {
  if (auto err = recursion_setup_error(q, x, y, e)) throw std::invalid_argument(*err);
  RecursionSetup s{delete_elements(q, ElementSet::single(e)), {}, {}, {}, {}};
  s.up = s.removed.to_new(q.above(e));
  s.down = s.removed.to_new(q.below(e));
  s.x = s.removed.to_new(x);
  s.y = s.removed.to_new(y);
  return s;
}

namespace {

template <class Count>
std::int64_t count_on_quotient(const Poset& base, ElementSet block, ElementSet x, ElementSet y,
                               Count count) {
  const Contraction c = contract(base, block);
  return count(c.quotient, c.image(x), c.image(y));
}

template <class Count>
std::int64_t count_on_double_quotient(const RecursionSetup& s, Count count) {
  const Contraction by_up = contract(s.removed.poset, s.up);
  const Contraction by_down = contract(by_up.quotient, by_up.image(s.down));
  return count(by_down.quotient, by_down.image(by_up.image(s.x)), by_down.image(by_up.image(s.y)));
}

}  // namespace

std::int64_t alpha_via_recursion(const Poset& q, ElementSet x, ElementSet y, int e) {
  const RecursionSetup s = make_recursion_setup(q, x, y, e);
  return alpha(s.removed.poset, s.x, s.y) + count_on_double_quotient(s, alpha);
}

std::int64_t phi_via_recursion(const Poset& q, ElementSet x, ElementSet y, int e) {
  const RecursionSetup s = make_recursion_setup(q, x, y, e);
  return count_on_quotient(s.removed.poset, s.up, s.x, s.y, phi) +
         count_on_quotient(s.removed.poset, s.down, s.x, s.y, phi);
}

Supermodularity check_supermodularity(const Poset& q, ElementSet x, ElementSet y, int e) {
  const RecursionSetup s = make_recursion_setup(q, x, y, e);
  Supermodularity r;
  r.lhs = alpha(s.removed.poset, s.x, s.y) + count_on_double_quotient(s, alpha);
  r.rhs = count_on_quotient(s.removed.poset, s.up, s.x, s.y, alpha) +
          count_on_quotient(s.removed.poset, s.down, s.x, s.y, alpha);
  r.strict = r.lhs > r.rhs;
  const ElementSet lo = min_of(q, q.ground());
  const ElementSet hi = max_of(q, q.ground());
  r.strictness_forced = lo.subset_of(q.below(e)) && hi.subset_of(q.above(e)) && lo.size() >= 2 &&
                        hi.size() >= 2;
  return r;
}

std::optional<BaseCase> triangle_base_case(const Poset& q, ElementSet x, ElementSet y) {
  require_extremal(q, x, y);
  if (!sets_parallel(q, x, y)) return std::nullopt;
  const ElementSet lo = min_of(q, q.ground());
  const ElementSet hi = max_of(q, q.ground());
  for (int e : q.ground() - lo - hi) {
    if (!q.neighbours(e).intersects(x | y)) return std::nullopt;
  }
  return BaseCase{up_closure(q, y) | (hi - x), x | y};
}

std::optional<XWitness> find_x_witness(const Poset& p) {
  for (int e = 0; e < p.size(); ++e) {
    std::optional<std::pair<int, int>> downs, ups;
    for (int a : p.below(e)) {
      for (int b : p.below(e)) {
        if (a < b && !p.comparable(a, b) && !downs) downs.emplace(a, b);
      }
    }
    for (int a : p.above(e)) {
      for (int b : p.above(e)) {
        if (a < b && !p.comparable(a, b) && !ups) ups.emplace(a, b);
      }
    }
    if (!downs || !ups) continue;
    XWitness w{downs->first, downs->second, e, ups->first, ups->second, {}};
    const ElementSet bottoms{w.d1, w.d2};
    const ElementSet tops{w.u1, w.u2};
    w.hull = up_closure(p, bottoms) & down_closure(p, tops);
    return w;
  }
  return std::nullopt;
}

std::int64_t triangle_count_by_formula(const Poset& p, Polytope kind) {
  const auto antichains = enumerate_antichains(p);
  std::int64_t total = 0;
  for (ElementSet q_set : connected_order_convex_subposets(p, 2)) {
    std::int64_t w_count = 0;
    for (ElementSet w : antichains) {
      if (sets_parallel(p, w, q_set)) ++w_count;
    }
    const Deletion sub = induced(p, q_set);
    const Poset& q = sub.poset;
    const ElementSet hi = max_of(q, q.ground());
    const ElementSet lo = min_of(q, q.ground());
    std::int64_t inner = 0;
    for (ElementSet x : subsets_of(hi)) {
      for (ElementSet y : subsets_of(lo)) {
        // Cells with X and Y comparable are empty.
        if (!sets_parallel(q, x, y)) continue;
        inner += kind == Polytope::Order ? phi(q, x, y) : alpha(q, x, y);
      }
    }
    total += w_count * inner;
  }
  return total;
}

}  // namespace polyface
