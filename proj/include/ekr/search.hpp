#pragma once

// Exhaustive searches over families on small grounds: the extremal function
// f(n, k, s), maximum diversity, initial intersecting families, the degree
// ratio scan and saturated cross-intersecting pairs. Every answer is exact;
// when a budget runs out the search throws BudgetExceeded.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ekr/binomial.hpp"
#include "ekr/family.hpp"
#include "ekr/measures.hpp"

namespace ekr {

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Refuse grounds with more k-sets than this.
  std::uint64_t max_candidates = 400;
  /// Fix [k] as a member. The optimum and the witness are unchanged, since
  /// the lex-first optimal witness always contains [k].
  bool symmetry = false;
};

struct SearchResult {
  std::uint64_t optimum = 0;
  Family witness;
  std::uint64_t nodes_expanded = 0;
  bool exhaustive = true;
};

/// f(n, k, s): the largest intersecting k-family with τ >= s, and the
/// lex-first optimal family (members compared in increasing order). When no
/// family qualifies the optimum is 0 with an empty witness. UsageError for
/// s < 1.
SearchResult max_intersecting(const GroundSpec& ground, int min_tau, const SearchOptions& options = {});

/// max γ(F) over intersecting families (over all families when
/// `require_intersecting` is false) with the lex-first optimal family.
SearchResult max_diversity(const GroundSpec& ground, bool require_intersecting = true,
                           const SearchOptions& options = {});

/// Calls `visit` once for every initial intersecting family, the empty one
/// included, and returns how many there were. The order is deterministic:
/// a family containing a set comes before those that skip it.
std::uint64_t for_each_initial_intersecting(const GroundSpec& ground, const std::function<void(const Family&)>& visit,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

struct ConjectureReport {
  GroundSpec ground;
  BigInt size_threshold;  // families must have more than C(n-3, k-3) members
  bool vacuous = true;    // no intersecting family exceeds the threshold
  std::optional<DegreeRatio> min_rho;
  Family witness;
  Rational reference = make_rational(3, 7);  // the Fano family's ratio
  std::uint64_t nodes_expanded = 0;
  bool probative = false;  // the conjecture's range is far beyond any scan
};

/// Minimum ϱ over intersecting families with |F| > C(n-3, k-3), with the
/// lex-first minimiser. Uses the bound ϱ >= k/n and stops once it is met.
ConjectureReport conjecture_scan(const GroundSpec& ground, const SearchOptions& options = {});

/// Calls `visit` for every saturated cross-intersecting pair (A, B) with A
/// a-uniform and B b-uniform on the same [n], i.e. A is exactly the set of
/// a-sets meeting every member of B and vice versa. Pairs arrive in the
/// lectic order of A. Returns the count.
std::uint64_t for_each_saturated_pair(const GroundSpec& a, const GroundSpec& b,
                                      const std::function<void(const Family&, const Family&)>& visit,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ekr
