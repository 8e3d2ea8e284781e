#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polyface/face_census.hpp"
#include "polyface/poset.hpp"

namespace polyface {

/// Independent ground truth for low-dimensional faces of O(P) and C(P).
///
/// Polytopes are given by their facet inequalities and 0/1 vertices; faces are
/// computed as closures (vertices sharing every inequality tight on a seed set)
/// and dimensions by exact integer rank. No floating point is involved.
namespace oracle {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticePoint {
  std::vector<int> coords;

  static LatticePoint indicator(int n, ElementSet s);
  ElementSet support() const;
  auto operator<=>(const LatticePoint&) const = default;
};

/// a . x <= b
struct Inequality {
  std::vector<int> a;
  int b = 0;

  std::int64_t lhs(const LatticePoint& x) const;
  bool operator==(const Inequality&) const = default;
};

struct FacetSystem {
  int n = 0;
  std::vector<Inequality> inequalities;
};

struct FaceRecord {
  std::vector<int> vertex_ids;  // sorted indices into the vertex list
  int dim = 0;
  std::vector<int> tight;  // sorted inequality indices

  bool is_triangle() const { return dim == 2 && vertex_ids.size() == 3; }
  bool is_square() const { return dim == 2 && vertex_ids.size() == 4; }
};

/// -x_p <= 0 for minimal p, x_q <= 1 for maximal q, x_p - x_q <= 0 per cover.
FacetSystem o_facet_system(const Poset& p);
/// -x_p <= 0 for every p, one chain-sum <= 1 per maximal chain.
FacetSystem c_facet_system(const Poset& p);
FacetSystem facet_system(const Poset& p, Polytope kind);

std::vector<LatticePoint> o_vertex_points(const Poset& p);
std::vector<LatticePoint> c_vertex_points(const Poset& p);
std::vector<LatticePoint> vertex_points(const Poset& p, Polytope kind);

/// Maximal chains, each listed bottom to top, in DFS order from minimal elements.
std::vector<std::vector<int>> maximal_chains(const Poset& p);

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
int integer_rank(std::vector<std::vector<std::int64_t>> rows);

/// Dimension of the affine hull; throws on empty input.
int affine_dim(const std::vector<LatticePoint>& pts);

bool satisfies(const FacetSystem& sys, const LatticePoint& x);
/// Tight inequalities have coefficient rank n.
bool is_vertex_certificate(const FacetSystem& sys, const LatticePoint& x);

/// Inequalities tight at every given point; throws if a point violates sys.
std::vector<int> tight_set(const FacetSystem& sys, const std::vector<LatticePoint>& pts);

/// Smallest face containing the seed vertices.
std::vector<int> face_closure(const FacetSystem& sys, const std::vector<LatticePoint>& vertices,
                              const std::vector<int>& seed);

/// Every 2-face, as the closure of some vertex pair or triple of dimension 2.
/// A polygon face is the closure of any three affinely independent vertices
/// on it, so this is complete. The polytope itself is skipped when it is
/// 2-dimensional. Throws OracleError on a 2-face with five or more vertices.
std::vector<FaceRecord> enumerate_2faces(const FacetSystem& sys,
                                         const std::vector<LatticePoint>& vertices);
/// Edges: closures of vertex pairs with dimension 1.
std::vector<FaceRecord> enumerate_edges(const FacetSystem& sys,
                                        const std::vector<LatticePoint>& vertices);

/// Proper faces only, like f_vector2.
FVector2 f_vector_low(const FacetSystem& sys, const std::vector<LatticePoint>& vertices);

/// Inequalities whose face has dimension dim(polytope) - 1.
std::vector<int> irredundant_facets(const FacetSystem& sys,
                                    const std::vector<LatticePoint>& vertices);

/// 0/1 points of {0,1}^n satisfying sys.
std::vector<LatticePoint> zero_one_solutions(const FacetSystem& sys);

struct Projection {
  std::vector<LatticePoint> points;
  std::vector<int> kept;  // surviving coordinates, ascending
};

/// Drops coordinates one at a time while the affine dimension is unchanged.
Projection project_to_full_dim(const std::vector<LatticePoint>& pts);

/// For a square face: the diagonal pairs (pairs whose closure is the whole
/// square) satisfy chi_A + chi_D = chi_B + chi_C, and no coordinate is set
/// in exactly one or three of the four vertices. Throws on non-squares.
bool check_square_diagonals(const FacetSystem& sys, const std::vector<LatticePoint>& vertices,
                            const FaceRecord& face);

/// Inclusion order among four vertex labels of a square.
enum class ContainmentShape { Diamond, TwoChains, Antichain, Other };
ContainmentShape containment_shape(const std::array<ElementSet, 4>& sets);

/// Oracle f-vector together with the 2-faces it was counted from.
struct OracleReport {
  FVector2 f;
  std::vector<FaceRecord> two_faces;
};
OracleReport run_oracle(const Poset& p, Polytope kind);

}  // namespace oracle
}  // namespace polyface
