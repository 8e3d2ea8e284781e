#pragma once

// Brute-force reference implementations for the tests. Everything here works
// from Poset::less and raw bitmasks only, so it shares no logic with the
// library code it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "polyface/poset.hpp"

namespace brute {

using polyface::Poset;
using Mask = std::uint32_t;

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (m >> i & 1U) out.push_back(i);
  }
  return out;
}

inline bool related(const Poset& p, int x, int y) { return x == y || p.less(x, y) || p.less(y, x); }

inline bool connected(const Poset& p, Mask s) {
  const auto v = members(s);
  if (v.empty()) return false;
  std::vector<int> parent(v.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (related(p, v[i], v[j])) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (find(static_cast<int>(i)) != find(0)) return false;
  }
  return true;
}

inline bool filter(const Poset& p, Mask s) {
  for (int x : members(s)) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.less(x, y) && !(s >> y & 1U)) return false;
    }
  }
  return true;
}

inline bool ideal(const Poset& p, Mask s) {
  for (int x : members(s)) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.less(y, x) && !(s >> y & 1U)) return false;
    }
  }
  return true;
}

inline bool antichain(const Poset& p, Mask s) {
  for (int x : members(s)) {
    for (int y : members(s)) {
      if (p.less(x, y)) return false;
    }
  }
  return true;
}

inline bool convex(const Poset& p, Mask s) {
  for (int x : members(s)) {
    for (int z : members(s)) {
      for (int y = 0; y < p.size(); ++y) {
        if (p.less(x, y) && p.less(y, z) && !(s >> y & 1U)) return false;
      }
    }
  }
  return true;
}

inline bool parallel(const Poset& p, Mask a, Mask b) {
  for (int x : members(a)) {
    for (int y : members(b)) {
      if (related(p, x, y)) return false;
    }
  }
  return true;
}

inline Mask minimal(const Poset& p, Mask s) {
  Mask out = 0;
  for (int x : members(s)) {
    bool low = true;
    for (int y : members(s)) low = low && !p.less(y, x);
    if (low) out |= Mask{1} << x;
  }
  return out;
}

inline Mask maximal(const Poset& p, Mask s) {
  Mask out = 0;
  for (int x : members(s)) {
    bool high = true;
    for (int y : members(s)) high = high && !p.less(x, y);
    if (high) out |= Mask{1} << x;
  }
  return out;
}

inline Mask up(const Poset& p, Mask s) {
  Mask out = s;
  for (int x : members(s)) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.less(x, y)) out |= Mask{1} << y;
    }
  }
  return out;
}

inline Mask down(const Poset& p, Mask s) {
  Mask out = s;
  for (int x : members(s)) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.less(y, x)) out |= Mask{1} << y;
    }
  }
  return out;
}

inline int height(const Poset& p, Mask s) {
  // Longest chain by trying every subset that is totally ordered.
  int best = 0;
  for (Mask c = s;; c = (c - 1) & s) {
    bool chain = true;
    for (int x : members(c)) {
      for (int y : members(c)) chain = chain && related(p, x, y);
    }
    if (chain) best = std::max(best, static_cast<int>(members(c).size()));
    if (c == 0) break;
  }
  return best;
}

inline std::vector<Mask> filters(const Poset& p) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << p.size()); ++m) {
    if (filter(p, m)) out.push_back(m);
  }
  return out;
}

inline std::vector<Mask> antichains(const Poset& p) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << p.size()); ++m) {
    if (antichain(p, m)) out.push_back(m);
  }
  return out;
}

/// Biconnected (X,Y)-filters of p viewed as Q.
inline long phi(const Poset& q, Mask x, Mask y) {
  const Mask all = (Mask{1} << q.size()) - 1;
  const Mask mx = maximal(q, all), mn = minimal(q, all);
  long count = 0;
  for (Mask g : filters(q)) {
    const Mask rest = all & ~g;
    if (connected(q, g) && connected(q, rest) && (rest & mx) == x && (g & mn) == y) ++count;
  }
  return count;
}

/// Biconnected (X,Y)-antichains of p viewed as Q.
inline long alpha(const Poset& q, Mask x, Mask y) {
  const Mask all = (Mask{1} << q.size()) - 1;
  const Mask mx = maximal(q, all), mn = minimal(q, all);
  long count = 0;
  for (Mask b : antichains(q)) {
    if (connected(q, b ^ mn) && connected(q, b ^ mx) && (b & mx) == x && (b & mn) == y) ++count;
  }
  return count;
}

inline bool x_free(const Poset& p) {
  const int n = p.size();
  for (int e = 0; e < n; ++e) {
    for (int d1 = 0; d1 < n; ++d1) {
      for (int d2 = d1 + 1; d2 < n; ++d2) {
        if (!p.less(d1, e) || !p.less(d2, e) || related(p, d1, d2)) continue;
        for (int u1 = 0; u1 < n; ++u1) {
          for (int u2 = u1 + 1; u2 < n; ++u2) {
            if (p.less(e, u1) && p.less(e, u2) && !related(p, u1, u2)) return false;
          }
        }
      }
    }
  }
  return true;
}

/// Row-major relation matrix minimized over all n! relabellings.
inline std::vector<bool> canonical(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) code[i * n + j] = p.less(perm[i], perm[j]);
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Every labelled strict order on n elements.
inline std::vector<Poset> labelled_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<Poset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (m >> k & 1U) lt[pairs[k].first][pairs[k].second] = true;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (lt[i][j] && lt[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k) {
          if (lt[i][j] && lt[j][k] && !lt[i][k]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (lt[i][j]) rel.emplace_back(i, j);
      }
    }
    out.push_back(Poset::from_relations(n, rel));
  }
  return out;
}

}  // namespace brute
