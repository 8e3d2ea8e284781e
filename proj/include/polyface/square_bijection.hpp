#pragma once

#include <cstdint>
#include <vector>

#include "polyface/face_census.hpp"

namespace polyface {

/// Square of O(P) -> square of C(P):
///   Q = min u max of F1 \ F2,  R = min u max of F2 \ F1,
///   S = {p in min(F1 n F2) : p || Q and p || R}.
CSquareSpec phi_map(const Poset& p, const OSquareSpec& s);

/// Square of C(P) -> square of O(P):
///   F1 = up(Q) u up(S) u (up(R) \ down(R)),  F2 symmetric.
OSquareSpec psi_map(const Poset& p, const CSquareSpec& s);

struct MatchedSquare {
  OSquareSpec o_square;
  CSquareSpec c_square;
};

struct BijectionReport {
  std::int64_t count_o = 0;
  std::int64_t count_c = 0;
  /// Squares whose image is not a valid square, or that do not come back
  /// under the inverse map; both directions.
  std::int64_t roundtrip_failures = 0;
  /// Phi applied to every square of O(P).
  std::vector<MatchedSquare> pairs;

  bool clean() const { return count_o == count_c && roundtrip_failures == 0; }
};

/// Runs both roundtrips over the proper square faces (none when |P| <= 2).
BijectionReport verify_bijection(const Poset& p);

}  // namespace polyface
