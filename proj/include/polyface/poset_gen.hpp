#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyface/poset.hpp"

namespace polyface {

/// Isomorphism invariant: the smallest relation-matrix code over all
/// relabellings of the ground set.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Relation code of p under the identity labelling. Pairs (i, j), i < j, are
/// visited column by column (j ascending, then i ascending); each contributes
/// the two bits [i < j] and [j < i], most significant first.
std::uint64_t relation_code(const Poset& p);
CanonicalForm canonical_form(const Poset& p);
/// The labelled poset whose relation_code is form.code.
Poset poset_from_canonical(const CanonicalForm& form);

constexpr int kDefaultMaxEnumeration = 7;
/// Enumeration cap; POLYFACE_MAX_N overrides the default when set.
int max_enumeration_size();

/// chain, antichain (both need k), v, lambda, x5, diamond.
Poset named_poset(const std::string& name, std::optional<int> k = std::nullopt);

/// Each pair i < j is related with the given probability, then closed.
Poset random_poset(int n, double density, std::uint64_t seed);

/// One canonical representative per isomorphism class, sorted by form.
std::vector<Poset> all_posets(int n);
/// all_posets with an explicit cap instead of max_enumeration_size().
std::vector<Poset> all_posets(int n, int max_n);

}  // namespace polyface
