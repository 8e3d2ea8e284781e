#include "polyface/poset_gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

namespace polyface {

namespace {

constexpr int kMaxCodeElements = 8;  // 28 pairs, 56 bits

int pair_count(int n) { return n * (n - 1) / 2; }

// Branch and bound over labellings: positions are filled left to right and
// column j of the code only depends on positions 0..j, so a partial labelling
// whose prefix already exceeds the best code can be abandoned.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p), n_(p.size()), perm_(n_), used_(n_, false) {}

  std::uint64_t run() {
    best_ = ~std::uint64_t{0};
    if (n_ <= 1) return 0;
    place(0, 0, false);
    return best_;
  }

 private:
  void place(int pos, std::uint64_t prefix, bool below_best) {
    if (pos == n_) {
      best_ = std::min(best_, prefix);
      return;
    }
    for (int x = 0; x < n_; ++x) {
      if (used_[x]) continue;
      std::uint64_t code = prefix;
      for (int i = 0; i < pos; ++i) {
        code = (code << 2) | (p_.less(perm_[i], x) ? 2U : 0U) | (p_.less(x, perm_[i]) ? 1U : 0U);
      }
      bool strictly_below = below_best;
      if (!below_best && best_ != ~std::uint64_t{0}) {
        const int shift = 2 * (pair_count(n_) - pair_count(pos + 1));
        const std::uint64_t best_prefix = best_ >> shift;
        if (code > best_prefix) continue;
        strictly_below = code < best_prefix;
      }
      used_[x] = true;
      perm_[pos] = x;
      place(pos + 1, code, strictly_below);
      used_[x] = false;
    }
  }

  const Poset& p_;
  int n_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t relation_code(const Poset& p) {
  std::uint64_t code = 0;
  for (int j = 1; j < p.size(); ++j) {
    for (int i = 0; i < j; ++i) {
      code = (code << 2) | (p.less(i, j) ? 2U : 0U) | (p.less(j, i) ? 1U : 0U);
    }
  }
  return code;
}

CanonicalForm canonical_form(const Poset& p) {
  if (p.size() > kMaxCodeElements) {
    throw PosetError("canonical form supports at most " + std::to_string(kMaxCodeElements) +
                     " elements");
  }
  return {p.size(), CanonicalSearch(p).run()};
}

Poset poset_from_canonical(const CanonicalForm& form) {
  std::vector<Cover> rel;
  int shift = 2 * pair_count(form.n);
  for (int j = 1; j < form.n; ++j) {
    for (int i = 0; i < j; ++i) {
      shift -= 2;
      const auto bits = (form.code >> shift) & 3U;
      if (bits & 2U) rel.emplace_back(i, j);
      if (bits & 1U) rel.emplace_back(j, i);
    }
  }
  return Poset::from_relations(form.n, rel);
}

int max_enumeration_size() {
  if (const char* env = std::getenv("POLYFACE_MAX_N")) {
    try {
      return std::clamp(std::stoi(env), 0, kMaxCodeElements);
    } catch (const std::exception&) {
      throw PosetError(std::string("POLYFACE_MAX_N is not an integer: ") + env);
    }
  }
  return kDefaultMaxEnumeration;
}

Poset named_poset(const std::string& name, std::optional<int> k) {
  auto need_k = [&]() {
    if (!k) throw PosetError("named poset '" + name + "' needs a size");
    if (*k < 0 || *k > ElementSet::kMaxElements) throw PosetError("size out of range");
    return *k;
  };
  if (name == "chain") {
    const int n = need_k();
    std::vector<Cover> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(n, covers);
  }
  if (name == "antichain") return Poset(need_k());
  if (name == "v") return Poset::from_covers(3, {{0, 1}, {0, 2}});
  if (name == "lambda") return Poset::from_covers(3, {{0, 2}, {1, 2}});
  if (name == "x5") return Poset::from_covers(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
  if (name == "diamond") return Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  throw PosetError("unknown named poset: " + name);
}

Poset random_poset(int n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw PosetError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Cover> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) rel.emplace_back(i, j);
    }
  }
  return Poset::from_relations(n, rel);
}

std::vector<Poset> all_posets(int n) { return all_posets(n, max_enumeration_size()); }

std::vector<Poset> all_posets(int n, int max_n) {
  if (n < 0 || n > std::min(max_n, kMaxCodeElements)) {
    throw PosetError("all_posets: n=" + std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(std::min(max_n, kMaxCodeElements)));
  }
  // Every poset has a natural labelling, so it suffices to grow posets by a
  // new element whose down-set is any ideal of the current poset.
  std::set<CanonicalForm> classes;
  std::vector<ElementSet> below(n);
  auto grow = [&](auto&& self, int k) -> void {
    if (k == n) {
      std::vector<Cover> rel;
      for (int x = 0; x < n; ++x) {
        for (int y : below[x]) rel.emplace_back(y, x);
      }
      classes.insert(canonical_form(Poset::from_relations(n, rel)));
      return;
    }
    const ElementSet prior = ElementSet::full(k);
    for (ElementSet::Mask m = 0; m <= prior.bits(); ++m) {
      const ElementSet down(m);
      bool closed = true;
      for (int y : down) {
        if (!below[y].subset_of(down)) {
          closed = false;
          break;
        }
      }
      if (!closed) continue;
      below[k] = down;
      self(self, k + 1);
    }
  };
  grow(grow, 0);

  std::vector<Poset> out;
  out.reserve(classes.size());
  for (const auto& form : classes) out.push_back(poset_from_canonical(form));
  return out;
}

}  // namespace polyface
