#include "polyface/geometry_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace polyface::oracle {

LatticePoint LatticePoint::indicator(int n, ElementSet s) {
  LatticePoint x{std::vector<int>(n, 0)};
  for (int i : s) x.coords[i] = 1;
  return x;
}

ElementSet LatticePoint::support() const {
  ElementSet s;
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
    if (coords[i] != 0) s.insert(i);
  }
  return s;
}

std::int64_t Inequality::lhs(const LatticePoint& x) const {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) v += std::int64_t{a[i]} * x.coords[i];
  return v;
}

namespace {

Inequality unit(int n, int index, int coeff, int bound) {
  Inequality q{std::vector<int>(n, 0), bound};
  q.a[index] = coeff;
  return q;
}

}  // namespace

FacetSystem o_facet_system(const Poset& p) {
  const int n = p.size();
  FacetSystem sys{n, {}};
  for (int x : min_of(p, p.ground())) sys.inequalities.push_back(unit(n, x, -1, 0));
  for (int x : max_of(p, p.ground())) sys.inequalities.push_back(unit(n, x, 1, 1));
  for (auto [lo, hi] : p.covers()) {
    Inequality q{std::vector<int>(n, 0), 0};
    q.a[lo] = 1;
    q.a[hi] = -1;
    sys.inequalities.push_back(q);
  }
  return sys;
}

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  std::vector<std::vector<int>> up_covers(p.size());
  for (auto [lo, hi] : p.covers()) up_covers[lo].push_back(hi);
  auto walk = [&](auto&& self, int x) -> void {
    chain.push_back(x);
    if (up_covers[x].empty()) {
      out.push_back(chain);
    } else {
      for (int y : up_covers[x]) self(self, y);
    }
    chain.pop_back();
  };
  for (int x : min_of(p, p.ground())) walk(walk, x);
  return out;
}

FacetSystem c_facet_system(const Poset& p) {
  const int n = p.size();
  FacetSystem sys{n, {}};
  for (int x = 0; x < n; ++x) sys.inequalities.push_back(unit(n, x, -1, 0));
  for (const auto& chain : maximal_chains(p)) {
    Inequality q{std::vector<int>(n, 0), 1};
    for (int x : chain) q.a[x] = 1;
    sys.inequalities.push_back(q);
  }
  return sys;
}

FacetSystem facet_system(const Poset& p, Polytope kind) {
  return kind == Polytope::Order ? o_facet_system(p) : c_facet_system(p);
}

namespace {

std::vector<LatticePoint> indicators(int n, const std::vector<ElementSet>& sets) {
  std::vector<LatticePoint> out;
  out.reserve(sets.size());
  for (ElementSet s : sets) out.push_back(LatticePoint::indicator(n, s));
  return out;
}

}  // namespace

std::vector<LatticePoint> o_vertex_points(const Poset& p) {
  return indicators(p.size(), enumerate_filters(p));
}

std::vector<LatticePoint> c_vertex_points(const Poset& p) {
  return indicators(p.size(), enumerate_antichains(p));
}

std::vector<LatticePoint> vertex_points(const Poset& p, Polytope kind) {
  return kind == Polytope::Order ? o_vertex_points(p) : c_vertex_points(p);
}

int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::int64_t prev_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& pr = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      auto& r = rows[i];
      for (std::size_t k = c + 1; k < cols; ++k) {
        // Bareiss step: the division is exact.
        r[k] = (pr[c] * r[k] - r[c] * pr[k]) / prev_pivot;
      }
      r[c] = 0;
    }
    prev_pivot = pr[c];
    ++rank;
  }
  return rank;
}

int affine_dim(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_dim of an empty point set");
  std::vector<std::vector<std::int64_t>> rows;
  const auto& base = pts.front().coords;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<std::int64_t> row(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) row[k] = pts[i].coords[k] - base[k];
    rows.push_back(std::move(row));
  }
  return integer_rank(std::move(rows));
}

bool satisfies(const FacetSystem& sys, const LatticePoint& x) {
  return std::all_of(sys.inequalities.begin(), sys.inequalities.end(),
                     [&](const Inequality& q) { return q.lhs(x) <= q.b; });
}

bool is_vertex_certificate(const FacetSystem& sys, const LatticePoint& x) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& q : sys.inequalities) {
    if (q.lhs(x) == q.b) rows.emplace_back(q.a.begin(), q.a.end());
  }
  return integer_rank(std::move(rows)) == sys.n;
}

std::vector<int> tight_set(const FacetSystem& sys, const std::vector<LatticePoint>& pts) {
  std::vector<int> out;
  for (const auto& x : pts) {
    if (!satisfies(sys, x)) throw std::invalid_argument("point violates the inequality system");
  }
  for (int i = 0; i < static_cast<int>(sys.inequalities.size()); ++i) {
    const auto& q = sys.inequalities[i];
    if (std::all_of(pts.begin(), pts.end(), [&](const auto& x) { return q.lhs(x) == q.b; })) {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

// Vertex/inequality incidence as word bitsets, for fast repeated closures.
class Incidence {
 public:
  Incidence(const FacetSystem& sys, const std::vector<LatticePoint>& vertices)
      : words_((sys.inequalities.size() + 63) / 64), vertices_(vertices.size()) {
    masks_.assign(vertices_ * words_, 0);
    for (std::size_t v = 0; v < vertices_; ++v) {
      if (!satisfies(sys, vertices[v])) throw std::invalid_argument("vertex violates the system");
      for (std::size_t i = 0; i < sys.inequalities.size(); ++i) {
        if (sys.inequalities[i].lhs(vertices[v]) == sys.inequalities[i].b) {
          masks_[v * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }
    }
  }

  std::vector<int> closure(const std::vector<int>& seed) const {
    std::vector<std::uint64_t> common(words_, ~std::uint64_t{0});
    for (int v : seed) {
      for (std::size_t w = 0; w < words_; ++w) common[w] &= masks_[v * words_ + w];
    }
    std::vector<int> out;
    for (std::size_t v = 0; v < vertices_; ++v) {
      bool inside = true;
      for (std::size_t w = 0; w < words_ && inside; ++w) {
        inside = (masks_[v * words_ + w] & common[w]) == common[w];
      }
      if (inside) out.push_back(static_cast<int>(v));
    }
    return out;
  }

 private:
  std::size_t words_;
  std::size_t vertices_;
  std::vector<std::uint64_t> masks_;
};

std::vector<LatticePoint> pick(const std::vector<LatticePoint>& vertices, const std::vector<int>& ids) {
  std::vector<LatticePoint> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(vertices[i]);
  return out;
}

FaceRecord make_record(const FacetSystem& sys, const std::vector<LatticePoint>& vertices,
                       std::vector<int> ids, int dim) {
  FaceRecord r;
  r.tight = tight_set(sys, pick(vertices, ids));
  r.vertex_ids = std::move(ids);
  r.dim = dim;
  return r;
}

}  // namespace

std::vector<int> face_closure(const FacetSystem& sys, const std::vector<LatticePoint>& vertices,
                              const std::vector<int>& seed) {
  if (seed.empty()) throw std::invalid_argument("face_closure needs a non-empty seed");
  return Incidence(sys, vertices).closure(seed);
}

std::vector<FaceRecord> enumerate_edges(const FacetSystem& sys,
                                        const std::vector<LatticePoint>& vertices) {
  const Incidence inc(sys, vertices);
  const int m = static_cast<int>(vertices.size());
  std::set<std::vector<int>> seen;
  std::vector<FaceRecord> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto ids = inc.closure({i, j});
      if (!seen.insert(ids).second) continue;
      const int dim = affine_dim(pick(vertices, ids));
      if (dim == 1) out.push_back(make_record(sys, vertices, std::move(ids), dim));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FaceRecord& a, const FaceRecord& b) { return a.vertex_ids < b.vertex_ids; });
  return out;
}

std::vector<FaceRecord> enumerate_2faces(const FacetSystem& sys,
                                         const std::vector<LatticePoint>& vertices) {
  const Incidence inc(sys, vertices);
  const int m = static_cast<int>(vertices.size());
  const bool polygon = m > 0 && affine_dim(vertices) == 2;
  std::map<std::vector<int>, int> dims;
  auto consider = [&](std::vector<int> seed) {
    auto ids = inc.closure(seed);
    if (dims.count(ids)) return;
    dims.emplace(ids, affine_dim(pick(vertices, ids)));
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      consider({i, j});
      for (int k = j + 1; k < m; ++k) consider({i, j, k});
    }
  }
  std::vector<FaceRecord> out;
  for (auto& [ids, dim] : dims) {
    if (dim != 2) continue;
    if (polygon && static_cast<int>(ids.size()) == m) continue;
    if (ids.size() >= 5) {
      std::string msg = "2-face with " + std::to_string(ids.size()) + " vertices:";
      for (int v : ids) msg += " " + vertices[v].support().to_string();
      throw OracleError(msg);
    }
    out.push_back(make_record(sys, vertices, ids, dim));
  }
  return out;
}

FVector2 f_vector_low(const FacetSystem& sys, const std::vector<LatticePoint>& vertices) {
  FVector2 f;
  if (vertices.empty()) return f;
  const int d = affine_dim(vertices);
  if (d > 0) f.f0 = static_cast<std::int64_t>(vertices.size());
  if (d > 1) f.f1 = static_cast<std::int64_t>(enumerate_edges(sys, vertices).size());
  if (d > 2) {
    for (const auto& face : enumerate_2faces(sys, vertices)) {
      if (face.is_triangle()) ++f.f2_tri;
      if (face.is_square()) ++f.f2_sq;
    }
  }
  return f;
}

std::vector<int> irredundant_facets(const FacetSystem& sys,
                                    const std::vector<LatticePoint>& vertices) {
  std::vector<int> out;
  if (vertices.empty()) return out;
  const int d = affine_dim(vertices);
  for (int i = 0; i < static_cast<int>(sys.inequalities.size()); ++i) {
    const auto& q = sys.inequalities[i];
    std::vector<LatticePoint> face;
    for (const auto& v : vertices) {
      if (q.lhs(v) == q.b) face.push_back(v);
    }
    if (!face.empty() && affine_dim(face) == d - 1) out.push_back(i);
  }
  return out;
}

std::vector<LatticePoint> zero_one_solutions(const FacetSystem& sys) {
  std::vector<LatticePoint> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << sys.n); ++m) {
    auto x = LatticePoint::indicator(sys.n, ElementSet(m));
    if (satisfies(sys, x)) out.push_back(std::move(x));
  }
  return out;
}

namespace {

std::vector<LatticePoint> keep_coordinates(const std::vector<LatticePoint>& pts,
                                           const std::vector<int>& kept) {
  std::vector<LatticePoint> out;
  out.reserve(pts.size());
  for (const auto& x : pts) {
    LatticePoint y;
    for (int k : kept) y.coords.push_back(x.coords[k]);
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace

Projection project_to_full_dim(const std::vector<LatticePoint>& pts) {
  const int d = affine_dim(pts);
  std::vector<int> kept(pts.front().coords.size());
  std::iota(kept.begin(), kept.end(), 0);
  bool dropped = true;
  while (dropped && static_cast<int>(kept.size()) > d) {
    dropped = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      auto trial = kept;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (affine_dim(keep_coordinates(pts, trial)) == d) {
        kept = std::move(trial);
        dropped = true;
        break;
      }
    }
  }
  return {keep_coordinates(pts, kept), kept};
}

bool check_square_diagonals(const FacetSystem& sys, const std::vector<LatticePoint>& vertices,
                            const FaceRecord& face) {
  if (!face.is_square()) throw std::invalid_argument("check_square_diagonals needs a square face");
  const Incidence inc(sys, vertices);
  const auto& v = face.vertex_ids;
  constexpr std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  int diagonal_splits = 0;
  bool sums_match = true;
  for (const auto& pr : pairings) {
    const int a = v[pr[0]], d = v[pr[1]], b = v[pr[2]], c = v[pr[3]];
    const bool diagonal = inc.closure({a, d}).size() == 4 && inc.closure({b, c}).size() == 4;
    if (!diagonal) continue;
    ++diagonal_splits;
    for (std::size_t k = 0; k < vertices[a].coords.size(); ++k) {
      if (vertices[a].coords[k] + vertices[d].coords[k] != vertices[b].coords[k] + vertices[c].coords[k]) {
        sums_match = false;
      }
    }
  }
  if (diagonal_splits != 1 || !sums_match) return false;
  for (std::size_t k = 0; k < vertices[v[0]].coords.size(); ++k) {
    int hits = 0;
    for (int id : v) hits += vertices[id].coords[k];
    if (hits == 1 || hits == 3) return false;
  }
  return true;
}

ContainmentShape containment_shape(const std::array<ElementSet, 4>& sets) {
  int relations = 0;
  std::array<int, 4> below{}, above{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && sets[i] != sets[j] && sets[i].subset_of(sets[j])) {
        ++relations;
        ++above[i];
        ++below[j];
      }
    }
  }
  if (relations == 0) return ContainmentShape::Antichain;
  if (relations == 2) {
    // Two relations on disjoint pairs: every set takes part in exactly one.
    bool disjoint = true;
    for (int i = 0; i < 4; ++i) disjoint = disjoint && above[i] + below[i] == 1;
    if (disjoint) return ContainmentShape::TwoChains;
  }
  if (relations == 5) {
    // bottom < both middles < top, middles incomparable
    std::array<int, 4> profile{};
    for (int i = 0; i < 4; ++i) profile[i] = above[i] * 4 + below[i];
    std::sort(profile.begin(), profile.end());
    if (profile == std::array<int, 4>{3, 1 * 4 + 1, 1 * 4 + 1, 3 * 4}) return ContainmentShape::Diamond;
  }
  return ContainmentShape::Other;
}

OracleReport run_oracle(const Poset& p, Polytope kind) {
  const FacetSystem sys = facet_system(p, kind);
  const auto vertices = vertex_points(p, kind);
  OracleReport r;
  r.f = f_vector_low(sys, vertices);
  if (p.size() > 2) r.two_faces = enumerate_2faces(sys, vertices);
  return r;
}

}  // namespace polyface::oracle
