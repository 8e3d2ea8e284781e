#include <gtest/gtest.h>

#include <array>
#include <set>

#include "brute.hpp"
#include "polyface/geometry_oracle.hpp"
#include "polyface/poset_gen.hpp"

using namespace polyface;
using namespace polyface::oracle;

namespace {

ElementSet S(std::initializer_list<int> xs) { return ElementSet(xs); }

LatticePoint pt(int n, std::initializer_list<int> xs) { return LatticePoint::indicator(n, ElementSet(xs)); }

std::vector<Poset> posets_up_to(int max_n, int min_n = 1) {
  std::vector<Poset> out;
  for (int n = min_n; n <= max_n; ++n) {
    for (auto& p : all_posets(n)) out.push_back(p);
  }
  return out;
}

const Poset V = named_poset("v");

int index_of(const std::vector<LatticePoint>& pts, ElementSet s) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].support() == s) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST(LatticePointTest, IndicatorAndSupport) {
  const LatticePoint x = pt(4, {1, 3});
  EXPECT_EQ(x.coords, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(x.support(), S({1, 3}));
  const Inequality ineq{{1, -1, 2, 0}, 1};
  EXPECT_EQ(ineq.lhs(x), -1);
}

TEST(FacetSystemTest, SmallSystems) {
  // V: 0 <= x0, x1 <= 1, x2 <= 1, x0 <= x1, x0 <= x2.
  EXPECT_EQ(o_facet_system(V).inequalities.size(), 5U);
  // V: three nonnegativity rows and two chains {0,1}, {0,2}.
  EXPECT_EQ(c_facet_system(V).inequalities.size(), 5U);
  EXPECT_EQ(maximal_chains(V), (std::vector<std::vector<int>>{{0, 1}, {0, 2}}));

  const Poset c1 = named_poset("chain", 1);
  const FacetSystem o = o_facet_system(c1);
  ASSERT_EQ(o.inequalities.size(), 2U);
  EXPECT_EQ(o.inequalities[0], (Inequality{{-1}, 0}));
  EXPECT_EQ(o.inequalities[1], (Inequality{{1}, 1}));
  EXPECT_EQ(c_facet_system(c1).inequalities.size(), 2U);
}

TEST(FacetSystemTest, MaximalChainsMatchBruteForce) {
  for (const auto& p : posets_up_to(5)) {
    std::set<brute::Mask> expect;
    const brute::Mask all = (brute::Mask{1} << p.size()) - 1;
    for (brute::Mask c = 1; c <= all; ++c) {
      if (brute::height(p, c) != static_cast<int>(brute::members(c).size())) continue;
      bool maximal = true;
      for (int x = 0; x < p.size() && maximal; ++x) {
        const brute::Mask bigger = c | brute::Mask{1} << x;
        if (bigger != c && brute::height(p, bigger) == static_cast<int>(brute::members(bigger).size())) {
          maximal = false;
        }
      }
      if (maximal) expect.insert(c);
    }
    std::set<brute::Mask> got;
    for (const auto& chain : maximal_chains(p)) {
      brute::Mask m = 0;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        m |= brute::Mask{1} << chain[i];
        if (i > 0) EXPECT_TRUE(p.less(chain[i - 1], chain[i]));
      }
      got.insert(m);
    }
    EXPECT_EQ(got, expect);
    EXPECT_EQ(maximal_chains(p).size(), expect.size());
  }
}

TEST(VertexTest, SoundAndComplete) {
  for (const auto& p : posets_up_to(6)) {
    for (Polytope kind : {Polytope::Order, Polytope::Chain}) {
      const FacetSystem sys = facet_system(p, kind);
      const auto pts = vertex_points(p, kind);
      EXPECT_EQ(std::set<LatticePoint>(pts.begin(), pts.end()).size(), pts.size());
      auto sols = zero_one_solutions(sys);
      auto sorted = pts;
      std::sort(sorted.begin(), sorted.end());
      std::sort(sols.begin(), sols.end());
      EXPECT_EQ(sorted, sols);
      if (p.size() <= 4) {
        for (const auto& x : pts) EXPECT_TRUE(is_vertex_certificate(sys, x));
      }
    }
  }
}

TEST(VertexTest, LabelsAreFiltersAndAntichains) {
  for (const auto& p : posets_up_to(5)) {
    for (const auto& x : o_vertex_points(p)) EXPECT_TRUE(brute::filter(p, x.support().bits()));
    for (const auto& x : c_vertex_points(p)) EXPECT_TRUE(brute::antichain(p, x.support().bits()));
    EXPECT_EQ(o_vertex_points(p).size(), brute::filters(p).size());
    EXPECT_EQ(c_vertex_points(p).size(), brute::antichains(p).size());
  }
}

TEST(RankTest, Bareiss) {
  EXPECT_EQ(integer_rank({}), 0);
  EXPECT_EQ(integer_rank({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(integer_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(integer_rank({{2, 3, 5}, {7, 11, 13}, {9, 14, 18}}), 2);
  EXPECT_EQ(integer_rank({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}), 3);
  EXPECT_EQ(integer_rank({{4, -2, 6, 8}, {2, -1, 3, 4}, {1, 1, 1, 1}}), 2);
}

TEST(DimensionTest, Examples) {
  EXPECT_THROW(affine_dim({}), std::invalid_argument);
  EXPECT_EQ(affine_dim({pt(3, {0})}), 0);
  EXPECT_EQ(affine_dim({pt(3, {}), pt(3, {0, 1})}), 1);
  EXPECT_EQ(affine_dim({pt(2, {}), pt(2, {0}), pt(2, {1}), pt(2, {0, 1})}), 2);
  // Coordinate 0 is set in exactly three of the four points: not a square.
  EXPECT_EQ(affine_dim({pt(3, {}), pt(3, {0}), pt(3, {0, 1}), pt(3, {0, 2})}), 3);
  // Full dimension for both polytopes.
  for (const auto& p : posets_up_to(5)) {
    EXPECT_EQ(affine_dim(o_vertex_points(p)), p.size());
    EXPECT_EQ(affine_dim(c_vertex_points(p)), p.size());
  }
}

TEST(TightSetTest, Examples) {
  const FacetSystem sys = o_facet_system(V);
  // Rows: -x0 <= 0, x1 <= 1, x2 <= 1, x0 - x1 <= 0, x0 - x2 <= 0.
  std::vector<int> origin_tight = tight_set(sys, {pt(3, {})});
  EXPECT_EQ(origin_tight.size(), 3U);
  EXPECT_EQ(tight_set(sys, {pt(3, {}), pt(3, {0, 1, 2})}).size(), 2U);
  EXPECT_THROW(tight_set(sys, {pt(3, {0})}), std::invalid_argument);
  EXPECT_TRUE(tight_set(sys, o_vertex_points(V)).empty());
}

TEST(ClosureTest, Examples) {
  const FacetSystem sys = o_facet_system(V);
  const auto pts = o_vertex_points(V);
  const int empty = index_of(pts, S({})), a = index_of(pts, S({1})), b = index_of(pts, S({2})),
            ab = index_of(pts, S({1, 2})), full = index_of(pts, S({0, 1, 2}));
  // {} and {1,2} are opposite corners of the square.
  std::vector<int> square{empty, a, b, ab};
  std::sort(square.begin(), square.end());
  EXPECT_EQ(face_closure(sys, pts, {empty, ab}), square);
  std::vector<int> edge{empty, a};
  std::sort(edge.begin(), edge.end());
  EXPECT_EQ(face_closure(sys, pts, {empty, a}), edge);
  EXPECT_EQ(face_closure(sys, pts, {full}), std::vector<int>{full});
  EXPECT_EQ(face_closure(sys, pts, {empty, full, ab}).size(), pts.size());
  EXPECT_THROW(face_closure(sys, pts, {}), std::invalid_argument);
}

TEST(ClosureTest, Laws) {
  for (const auto& p : posets_up_to(4)) {
    for (Polytope kind : {Polytope::Order, Polytope::Chain}) {
      const FacetSystem sys = facet_system(p, kind);
      const auto pts = vertex_points(p, kind);
      for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        EXPECT_EQ(face_closure(sys, pts, {i}), std::vector<int>{i});
        for (int j = i + 1; j < static_cast<int>(pts.size()); ++j) {
          const auto c = face_closure(sys, pts, {i, j});
          EXPECT_TRUE(std::binary_search(c.begin(), c.end(), i));
          EXPECT_TRUE(std::binary_search(c.begin(), c.end(), j));
          EXPECT_EQ(face_closure(sys, pts, c), c);
        }
      }
    }
  }
}

TEST(TwoFaceTest, Counts) {
  const auto count = [](const std::vector<FaceRecord>& faces, bool squares) {
    return std::count_if(faces.begin(), faces.end(),
                         [&](const FaceRecord& f) { return squares ? f.is_square() : f.is_triangle(); });
  };
  const auto v = enumerate_2faces(o_facet_system(V), o_vertex_points(V));
  EXPECT_EQ(count(v, false), 4);
  EXPECT_EQ(count(v, true), 1);
  EXPECT_EQ(v.size(), 5U);

  const Poset a3 = named_poset("antichain", 3);
  const auto cube = enumerate_2faces(o_facet_system(a3), o_vertex_points(a3));
  EXPECT_EQ(count(cube, true), 6);
  EXPECT_EQ(count(cube, false), 0);

  // The square A2 is not its own 2-face.
  const Poset a2 = named_poset("antichain", 2);
  EXPECT_TRUE(enumerate_2faces(o_facet_system(a2), o_vertex_points(a2)).empty());
  EXPECT_EQ(enumerate_edges(o_facet_system(a2), o_vertex_points(a2)).size(), 4U);
}

TEST(TwoFaceTest, FVectors) {
  EXPECT_EQ(f_vector_low(o_facet_system(V), o_vertex_points(V)), (FVector2{5, 8, 4, 1}));
  EXPECT_EQ(f_vector_low(c_facet_system(V), c_vertex_points(V)), (FVector2{5, 8, 4, 1}));
  const Poset c3 = named_poset("chain", 3);
  EXPECT_EQ(f_vector_low(c_facet_system(c3), c_vertex_points(c3)), (FVector2{4, 6, 4, 0}));
  EXPECT_EQ(run_oracle(named_poset("antichain", 4), Polytope::Order).f, (FVector2{16, 32, 0, 24}));
  EXPECT_EQ(run_oracle(named_poset("chain", 4), Polytope::Order).f, (FVector2{5, 10, 10, 0}));
  EXPECT_EQ(run_oracle(named_poset("x5"), Polytope::Order).f, (FVector2{8, 24, 32, 2}));
  EXPECT_EQ(run_oracle(named_poset("x5"), Polytope::Chain).f, (FVector2{8, 24, 33, 2}));
}

TEST(TwoFaceTest, EveryFaceIsATriangleOrSquare) {
  for (const auto& p : posets_up_to(5, 3)) {
    for (Polytope kind : {Polytope::Order, Polytope::Chain}) {
      const FacetSystem sys = facet_system(p, kind);
      const auto pts = vertex_points(p, kind);
      for (const auto& f : enumerate_2faces(sys, pts)) {
        EXPECT_EQ(f.dim, 2);
        EXPECT_TRUE(f.is_triangle() || f.is_square());
        std::vector<LatticePoint> on;
        for (int i : f.vertex_ids) on.push_back(pts[i]);
        EXPECT_EQ(tight_set(sys, on), f.tight);
        EXPECT_EQ(face_closure(sys, pts, f.vertex_ids), f.vertex_ids);
      }
    }
  }
}

TEST(ProjectionTest, Examples) {
  const auto pts = o_vertex_points(V);
  std::vector<LatticePoint> square;
  for (ElementSet s : {S({}), S({1}), S({2}), S({1, 2})}) square.push_back(pts[index_of(pts, s)]);
  const Projection proj = project_to_full_dim(square);
  EXPECT_EQ(proj.kept.size(), 2U);
  EXPECT_EQ(affine_dim(proj.points), 2);
  for (const auto& x : proj.points) EXPECT_EQ(x.coords.size(), 2U);

  const Projection single = project_to_full_dim({pt(3, {0, 2})});
  EXPECT_TRUE(single.kept.empty());
  EXPECT_EQ(single.points.size(), 1U);
}

TEST(DiagonalTest, Examples) {
  const FacetSystem sys = o_facet_system(V);
  const auto pts = o_vertex_points(V);
  const auto faces = enumerate_2faces(sys, pts);
  int squares = 0;
  for (const auto& f : faces) {
    if (f.is_square()) {
      ++squares;
      EXPECT_TRUE(check_square_diagonals(sys, pts, f));
    } else {
      EXPECT_THROW(check_square_diagonals(sys, pts, f), std::invalid_argument);
    }
  }
  EXPECT_EQ(squares, 1);
}

TEST(ShapeTest, Examples) {
  EXPECT_EQ(containment_shape({S({}), S({1}), S({2}), S({1, 2})}), ContainmentShape::Diamond);
  EXPECT_EQ(containment_shape({S({0}), S({0, 1}), S({2}), S({2, 3})}), ContainmentShape::TwoChains);
  EXPECT_EQ(containment_shape({S({0}), S({1}), S({2}), S({3})}), ContainmentShape::Antichain);
  EXPECT_EQ(containment_shape({S({}), S({0}), S({0, 1}), S({0, 1, 2})}), ContainmentShape::Other);
}

TEST(ShapeTest, SquaresOfBothPolytopes) {
  for (const auto& p : posets_up_to(5, 3)) {
    for (Polytope kind : {Polytope::Order, Polytope::Chain}) {
      const FacetSystem sys = facet_system(p, kind);
      const auto pts = vertex_points(p, kind);
      for (const auto& f : enumerate_2faces(sys, pts)) {
        if (!f.is_square()) continue;
        EXPECT_TRUE(check_square_diagonals(sys, pts, f));
        std::array<ElementSet, 4> labels;
        for (int i = 0; i < 4; ++i) labels[i] = pts[f.vertex_ids[i]].support();
        const ContainmentShape shape = containment_shape(labels);
        if (kind == Polytope::Order) {
          EXPECT_EQ(shape, ContainmentShape::Diamond);
        } else {
          EXPECT_NE(shape, ContainmentShape::Other);
        }
      }
    }
  }
}

TEST(FacetCountTest, OrderAtMostChainWithEqualityIffXFree) {
  for (const auto& p : posets_up_to(6)) {
    const auto o = irredundant_facets(o_facet_system(p), o_vertex_points(p)).size();
    const auto c = irredundant_facets(c_facet_system(p), c_vertex_points(p)).size();
    EXPECT_LE(o, c);
    EXPECT_EQ(o == c, brute::x_free(p));
  }
}

TEST(FacetCountTest, AllListedInequalitiesAreFacets) {
  // The O rows use covers only and the C rows use maximal chains only.
  for (const auto& p : posets_up_to(5)) {
    const FacetSystem o = o_facet_system(p);
    EXPECT_EQ(irredundant_facets(o, o_vertex_points(p)).size(), o.inequalities.size());
  }
}
