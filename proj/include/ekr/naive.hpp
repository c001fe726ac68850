#pragma once

// Slow reference implementations used as test oracles. They share only the
// container types with the main library and work on plain element vectors;
// none of them call the measures, shifting or search code.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ekr/family.hpp"

namespace ekr::naive {

using Set = std::vector<int>;  // strictly increasing elements
using SetFamily = std::set<Set>;

SetFamily to_sets(const Family& family);
Family from_sets(const GroundSpec& ground, const SetFamily& sets);

/// Every k-subset of [n] in increasing lexicographic tuple order.
std::vector<Set> k_subsets(int n, int k);

bool intersecting(const SetFamily& f);

/// Minimum cover size and the first minimum cover in tuple order; nothing
/// on the empty family.
std::optional<std::pair<int, Set>> cover(const SetFamily& f, int n);

/// Largest q such that every k-subset of some q-set is a member, with the
/// first such q-set.
std::pair<int, Set> clique(const SetFamily& f, int n, int k);

/// Pairs (i, j), i < j, with no member avoiding both.
std::vector<std::pair<int, int>> two_covers(const SetFamily& f, int n);

/// S_ij applied member by member against the original family.
SetFamily shift(const SetFamily& f, int i, int j);

/// Closed under A ≺ B (a_t <= b_t for all t) for every k-set A.
bool initial(const SetFamily& f, int n, int k);

struct Optimum {
  std::uint64_t value = 0;
  SetFamily witness;  // first optimum: member lists compared as sequences
};

/// Largest intersecting family with τ >= s, over all 2^C(n,k) subfamilies.
Optimum max_intersecting(int n, int k, int s);
/// Largest γ over intersecting subfamilies.
Optimum max_diversity(int n, int k);
/// Number of initial intersecting families (the empty family included).
std::uint64_t count_initial_intersecting(int n, int k);
/// Minimum Δ/|F| over intersecting families with |F| > threshold, as a
/// (Δ, |F|) pair in lowest terms; nothing when no family qualifies.
std::optional<std::pair<std::uint64_t, std::uint64_t>> min_rho(int n, int k, std::uint64_t threshold);

}  // namespace ekr::naive
