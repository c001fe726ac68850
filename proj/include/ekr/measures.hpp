#pragma once

// Structural measures of families: intersection predicates, covering number
// τ, transversals, diversity γ, maximum degree Δ, degree ratio ϱ and clique
// number ω. All results are exact; the exponential searches (τ, ω,
// transversals) take a node budget and throw BudgetExceeded instead of
// returning an approximation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekr/binomial.hpp"
#include "ekr/family.hpp"

namespace ekr {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Every two members meet. Empty and one-member families are intersecting.
bool is_intersecting(const Family& family);

/// |F ∩ G| >= t for all F in `a`, G in `b`. The families may have different
/// uniformities but must share n (UsageError otherwise); t >= 1.
bool is_cross_t_intersecting(const Family& a, const Family& b, int t = 1);
inline bool is_cross_intersecting(const Family& a, const Family& b) { return is_cross_t_intersecting(a, b, 1); }

/// No element lies in every member, i.e. τ >= 2 for a nonempty family.
bool is_star(const Family& family);

struct Cover {
  int size = 0;
  ElementSet witness;  // lex-smallest among minimum covers
};

/// τ(F) with the lex-smallest minimum transversal. DomainError on ∅.
Cover covering_number(const Family& family, std::uint64_t node_budget = kDefaultNodeBudget);

/// Lex-smallest transversal of size exactly t, if any. Every superset of a
/// transversal is one, so this exists iff τ(F) <= t (for t <= n).
std::optional<ElementSet> find_transversal(const Family& family, int t,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

/// T^(t)(F): every t-subset of [n] meeting all members, as a t-uniform
/// family over [n]. UsageError unless 1 <= t <= n.
Family transversals(const Family& family, int t, std::uint64_t node_budget = kDefaultNodeBudget);

/// Δ(F) = max_i |F(i)| (0 on ∅).
std::uint64_t max_degree(const Family& family);

/// γ(F) = min_i |F(ī)| = |F| - Δ(F); 0 on ∅.
std::uint64_t diversity(const Family& family);

struct DegreeRatio {
  Rational value;
  int element = 0;  // smallest element of maximum degree
};

/// ϱ(F) = Δ(F) / |F| as an exact rational. DomainError on ∅.
DegreeRatio rho(const Family& family);

struct Clique {
  int size = 0;
  ElementSet witness;  // lex-smallest q-set Q with binom(Q, k) ⊆ F
};

/// ω(F). DomainError on ∅, UsageError for k = 0.
Clique clique_number(const Family& family, std::uint64_t node_budget = kDefaultNodeBudget);

struct TheoremCheck {
  std::string name;
  bool hypotheses_met = false;
  std::optional<bool> conclusion_holds;  // set only when hypotheses_met
  std::string detail;
};

/// Evaluates the hypotheses and, where they hold, the conclusions of the
/// four main stability statements on a concrete intersecting family:
///
///   main0: n > 48k                                   ⇒ γ(F) <= C(n-3, k-2)
///   main1: n >= 2k, |F| >= 48 C(n-3, k-3)            ⇒ ϱ(F) > 1/2
///   main2: 0 < ε <= 1/24, n >= k/ε, |F| >= 48 C(n-3, k-3) ⇒ ϱ(F) > 2/3 - ε
///   main3: k >= 13, n >= 18k, τ(F) >= 3              ⇒ |F| <= |G(n, k)|
///
/// UsageError if the family is not intersecting.
std::vector<TheoremCheck> theorem_predicates(const Family& family, const Rational& epsilon);

struct MeasureReport {
  GroundSpec ground;
  std::size_t size = 0;
  bool intersecting = false;
  std::optional<Cover> tau = std::nullopt;
  std::uint64_t gamma = 0;
  std::optional<DegreeRatio> rho = std::nullopt;
  std::uint64_t delta = 0;
  std::optional<Clique> omega = std::nullopt;
};

/// All measures at once; τ, ϱ and ω are absent for the empty family.
MeasureReport measure(const Family& family, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ekr
