#pragma once

// The named intersecting families. Distinguished elements sit exactly where
// the usual definitions put them (1 first, then [2, k+1], ...); there is no
// relabelling.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ekr/bounds.hpp"
#include "ekr/family.hpp"

namespace ekr {

/// Builders refuse grounds with more than this many k-sets, since each one
/// filters the full enumeration.
inline constexpr std::uint64_t kMaxConstructionCandidates = 20'000'000;

/// All k-sets containing 1. DomainError for k = 0.
Family full_star(const GroundSpec& ground);

/// H(n, k) = {F : 1 ∈ F, F ∩ [2, k+1] ≠ ∅} ∪ {[2, k+1]}. DomainError unless
/// n > 2k >= 2.
Family hilton_milner(const GroundSpec& ground);

/// T(n, k) = {T : |T ∩ [3]| >= 2}. DomainError unless n >= 3 and k >= 2.
Family triangle_family(const GroundSpec& ground);

/// A_r(n, k) = {A : 1 ∈ A, A ∩ [2, r+1] ≠ ∅} ∪ {A : 1 ∉ A, [2, r+1] ⊆ A}.
/// DomainError unless 2 <= r <= k and n >= k + r.
Family a_r_family(const GroundSpec& ground, int r);

/// The three sets [2, k+1], {2} ∪ [k+2, 2k], {3} ∪ [k+2, 2k].
std::array<KSet, 3> g_family_b_sets(int k);
/// G(n, k): the three B-sets plus every set containing 1 that meets all of
/// them. DomainError unless k >= 3 and n >= 2k.
Family g_family(const GroundSpec& ground);

/// K(n, k, s) = {K : 1 ∈ K, |K ∩ [2, k+s-1]| >= s-1} ∪ binom([2, k+s-1], k).
/// DomainError unless s >= 1 and n >= k + s - 1.
Family k_family(const GroundSpec& ground, int s);

/// Lines of the Fano plane on [7].
const std::array<KSet, 7>& fano_lines();
/// All k-sets whose trace on [7] is a Fano line. DomainError unless n >= 10
/// and k >= 3.
Family fano_family(const GroundSpec& ground);

/// Names accepted by build_named.
const std::vector<std::string>& construction_names();
/// star, hm, triangle, ar (param r), g, k (param s), fano, lex (param m).
/// UsageError for an unknown name or missing parameter.
Family build_named(std::string_view name, const GroundSpec& ground, const Params& params = {});

}  // namespace ekr
