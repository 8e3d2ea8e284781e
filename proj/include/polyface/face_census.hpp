#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polyface/poset.hpp"

namespace polyface {

enum class Polytope { Order, Chain };

std::string to_string(Polytope kind);  // "O" / "C"
Polytope polytope_from_string(const std::string& s);

using Edge = std::pair<ElementSet, ElementSet>;

/// Vertex labels of a triangular 2-face. Order triangles are stored as a chain
/// a < b < c of filters; chain triangles in the normal form of
/// normalize_c_triangle.
struct Triangle {
  ElementSet a, b, c;
  auto operator<=>(const Triangle&) const = default;
};

/// (Q, W, G) parametrizing a triangle of O(P).
struct OTriangleTriple {
  ElementSet q, w, g;
  auto operator<=>(const OTriangleTriple&) const = default;
};

/// (Q, W, B) parametrizing a triangle of C(P).
struct CTriangleTriple {
  ElementSet q, w, b;
  auto operator<=>(const CTriangleTriple&) const = default;
};

/// Unordered pair of filters spanning a square of O(P); f1 < f2 by bitmask.
struct OSquareSpec {
  ElementSet f1, f2;

  static OSquareSpec make(ElementSet a, ElementSet b) { return a < b ? OSquareSpec{a, b} : OSquareSpec{b, a}; }
  /// {F1 n F2, F1, F2, F1 u F2}, sorted.
  std::vector<ElementSet> vertices() const;
  auto operator<=>(const OSquareSpec&) const = default;
};

/// ({Q, R}, S) spanning a square of C(P); q < r by bitmask.
///
/// q1/q2 split Q into min and max when Q has height 2; a singleton Q is split
/// as q1 = {} and q2 = Q. Same for R.
struct CSquareSpec {
  ElementSet q, r, s;
  ElementSet q1, q2, r1, r2;

  static CSquareSpec make(const Poset& p, ElementSet q, ElementSet r, ElementSet s);
  /// {Q_i u R_j u S}, sorted.
  std::vector<ElementSet> vertices() const;
  bool operator==(const CSquareSpec& o) const { return q == o.q && r == o.r && s == o.s; }
  auto operator<=>(const CSquareSpec& o) const {
    return std::tie(q, r, s) <=> std::tie(o.q, o.r, o.s);
  }
};

struct FVector2 {
  std::int64_t f0 = 0, f1 = 0, f2_tri = 0, f2_sq = 0;

  std::int64_t f2() const { return f2_tri + f2_sq; }
  bool operator==(const FVector2&) const = default;
};

// Vertices, edges and 2-faces by their combinatorial characterizations.

std::vector<ElementSet> vertex_labels(const Poset& p, Polytope kind);
std::vector<Edge> o_edges(const Poset& p);
std::vector<Edge> c_edges(const Poset& p);
std::vector<Triangle> o_triangles(const Poset& p);
std::vector<Triangle> c_triangles(const Poset& p);
bool is_c_triangle(const Poset& p, ElementSet a, ElementSet b, ElementSet c);
/// Relabels so a = min(a u b u c) and c = max(a u b u c).
Triangle normalize_c_triangle(const Poset& p, ElementSet a, ElementSet b, ElementSet c);

bool is_o_triangle_triple(const Poset& p, const OTriangleTriple& t);
bool is_c_triangle_triple(const Poset& p, const CTriangleTriple& t);
std::vector<OTriangleTriple> o_triangle_params(const Poset& p);
std::vector<CTriangleTriple> c_triangle_params(const Poset& p);
/// (Q, W, G) -> (H \ Q, (H \ Q) u G, H) with H = up(Q u W).
Triangle map_o_triple(const Poset& p, const OTriangleTriple& t);
/// (Q, W, B) -> (W u min Q, W u B, W u max Q).
Triangle map_c_triple(const Poset& p, const CTriangleTriple& t);

bool is_o_square(const Poset& p, const OSquareSpec& s);
bool is_c_square(const Poset& p, const CSquareSpec& s);
std::vector<OSquareSpec> o_squares(const Poset& p);
std::vector<CSquareSpec> c_squares(const Poset& p);

/// Proper faces only: f_i is reported as 0 once i >= |P|.
FVector2 f_vector2(const Poset& p, Polytope kind);

// Biconnected filter / antichain counters. Q is a standalone poset;
// X must lie in max(Q) and Y in min(Q).

std::int64_t phi(const Poset& q, ElementSet x, ElementSet y);
std::int64_t alpha(const Poset& q, ElementSet x, ElementSet y);

/// Q' = Q - e with U (above e) and D (below e), all in Q' labels.
struct RecursionSetup {
  Deletion removed;  // Q' and the relabelling
  ElementSet up, down, x, y;
};

/// Validates the recursion preconditions: Q connected, e neither minimal nor
/// maximal, and {e}, X, Y pairwise parallel.
RecursionSetup make_recursion_setup(const Poset& q, ElementSet x, ElementSet y, int e);
std::optional<std::string> recursion_setup_error(const Poset& q, ElementSet x, ElementSet y, int e);

/// alpha(Q', X, Y) + alpha(Q'/U/D, X, Y)
std::int64_t alpha_via_recursion(const Poset& q, ElementSet x, ElementSet y, int e);
/// phi(Q'/U, X, Y) + phi(Q'/D, X, Y)
std::int64_t phi_via_recursion(const Poset& q, ElementSet x, ElementSet y, int e);

struct Supermodularity {
  std::int64_t lhs = 0;  // alpha(Q') + alpha(Q'/U/D)
  std::int64_t rhs = 0;  // alpha(Q'/U) + alpha(Q'/D)
  bool strict = false;
  /// min(Q) in D, max(Q) in U and both have at least two elements.
  bool strictness_forced = false;

  bool holds() const { return lhs >= rhs && (!strictness_forced || strict); }
};

Supermodularity check_supermodularity(const Poset& q, ElementSet x, ElementSet y, int e);

/// When X || Y and no non-extremal element of Q is parallel to X u Y, the
/// only (X,Y)-filter is up(Y) u (max Q \ X) and the only (X,Y)-antichain is
/// X u Y.
struct BaseCase {
  ElementSet filter;
  ElementSet antichain;
};
std::optional<BaseCase> triangle_base_case(const Poset& q, ElementSet x, ElementSet y);

/// An X subposet d1,d2 < e < u1,u2 together with its order-convex hull.
struct XWitness {
  int d1, d2, e, u1, u2;
  ElementSet hull;
};
std::optional<XWitness> find_x_witness(const Poset& p);

/// Sum over connected order-convex Q of height >= 2 of
/// #{W antichain, W || Q} * sum_{X, Y} phi (O) or alpha (C).
/// Counts raw triangles, so it matches o_triangles / c_triangles sizes.
std::int64_t triangle_count_by_formula(const Poset& p, Polytope kind);

}  // namespace polyface
