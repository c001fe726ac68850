#pragma once

// Closed-form family sizes and validators for the binomial inequalities used
// in the stability arguments. Every comparison is exact: integers are
// arbitrary precision and ratios are rationals.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ekr/binomial.hpp"
#include "ekr/family.hpp"

namespace ekr {

using Params = std::map<std::string, std::int64_t, std::less<>>;

// --- Closed forms -----------------------------------------------------------
// Each throws DomainError outside its stated range.

/// f(n, k, 1) = C(n-1, k-1); n >= 2k >= 2.
BigInt ekr_bound(std::int64_t n, std::int64_t k);
/// f(n, k, 2) = C(n-1, k-1) - C(n-k-1, k-1) + 1; n >= 2k, k >= 2.
BigInt hilton_milner_size(std::int64_t n, std::int64_t k);
/// |G(n, k)| by inclusion-exclusion; n >= 2k, k >= 3.
BigInt g_family_size(std::int64_t n, std::int64_t k);
/// g(n, k, s) = |K(n, k, s)| =
///   sum_{s-1 <= j <= k-1} C(k+s-2, j) C(n-k-s+1, k-j-1) + C(k+s-2, k);
/// n >= k + s - 1, s >= 1, k >= 1.
BigInt k_family_size(std::int64_t n, std::int64_t k, std::int64_t s);
/// g(n, k, 3) = C(n-1, k-1) - C(n-k-2, k-1) - (k+1) C(n-k-2, k-2) + k + 1;
/// n > 2k >= 6.
BigInt g3_closed_form(std::int64_t n, std::int64_t k);
/// Δ(A_r(n, k)) = C(n-1, k-1) - C(n-r-1, k-1); 2 <= r <= k, n >= k + r.
BigInt a_r_max_degree(std::int64_t n, std::int64_t k, std::int64_t r);
/// γ(A_r(n, k)) = C(n-r-1, k-r); same range.
BigInt a_r_diversity(std::int64_t n, std::int64_t k, std::int64_t r);
/// |A_r(n, k)| = Δ + γ; same range.
BigInt a_r_size(std::int64_t n, std::int64_t k, std::int64_t r);
/// |G(n, k)| / C(n-3, k-3), which tends to k^2 - k + 1 as n grows.
Rational g_family_leading_ratio(std::int64_t n, std::int64_t k);

/// Names accepted by size_formula: ekr, hm, g, k, g3, ar-delta, ar-gamma, ar.
const std::vector<std::string>& size_formula_names();
/// Dispatch by name; parameters n, k and where needed r or s. UsageError on
/// an unknown name or missing parameter.
BigInt size_formula(std::string_view name, const Params& params);

// --- Inequalities -----------------------------------------------------------

enum class Relation { le, lt, ge, gt };
std::string_view relation_symbol(Relation r);

struct BoundReport {
  std::string name;
  Params params;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::le;
  /// Some statements are disjunctions "lhs R rhs or lhs2 R rhs2".
  std::optional<Rational> lhs2;
  std::optional<Rational> rhs2;
  bool preconditions_met = false;
  bool holds = false;  // meaningful only when preconditions_met
  std::string note;
};

struct InequalityInfo {
  std::string name;
  std::vector<std::string> params;
  std::string statement;
  /// The statement quantifies over families; with bare parameters the sizes
  /// (A, B, F, ...) are supplied as parameters and the structural hypotheses
  /// are taken as given.
  bool family_level = false;
};

const std::vector<InequalityInfo>& inequality_registry();

/// Evaluates a registered inequality at a parameter point. Never throws for
/// out-of-range points: preconditions_met is false instead. UsageError for
/// an unknown name or a missing parameter.
BoundReport inequality_check(std::string_view name, const Params& params);

/// Family-level forms. These derive n, the uniformities and the sizes from
/// the families and check the structural hypotheses (cross-intersecting,
/// non-trivial, ...) before evaluating the bound.
///
///   "nontrivial"  |A|+|B| <= C(n,b) - 2C(n-a,b) + C(n-2a,b) + 2
///   "ft92"        |A|+|B| <= C(n,b) - C(n-a,b) + 1
///   "t-intersecting"  |B| <= C(n,k-t) or |A| <= C(n,k-t-1)  (extra: t)
///   "gft92-1", "gft92-2"  bounds by the regime of r         (extra: r)
///   "hahb"        same bound as "nontrivial" for b > a, n >= 5b
///   "hfxy", "hfxy2"  restriction lemmas                      (extra: x, y)
/// and single-family "gft92-7", "gft92-8" (extra: r) taking `a` as F.
BoundReport inequality_check(std::string_view name, const Family& a, const Family& b,
                             const Params& extra = {});
BoundReport inequality_check(std::string_view name, const Family& f, const Params& extra = {});

struct RRegimeBounds {
  BigInt small_r;  // C(n,b) - C(n-a+1,b) + C(n-a-r+1,b-r) + r, for r <= b-1
  BigInt large_r;  // C(n,b) - C(n-a+1,b) + n - a + 1,          for r >= b
};
/// DomainError unless n >= a + b and 1 <= r <= n - a + 1.
RRegimeBounds r_regime_bounds(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r);
/// The bound that applies to r's regime.
BigInt r_regime_applicable(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r);

// --- Parameter scans --------------------------------------------------------

struct ParamRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// "n=5..200,k=2..20,i=2..6" (a single value "k=3" is also accepted).
std::vector<ParamRange> parse_scan(std::string_view spec);

struct ScanSummary {
  std::uint64_t points = 0;
  std::uint64_t applicable = 0;  // preconditions met
  std::uint64_t violations = 0;
};

/// Evaluates `name` at every point of the box. The callback sees every
/// report; UsageError if the box does not name exactly the inequality's
/// parameters.
ScanSummary scan_inequality(std::string_view name, const std::vector<ParamRange>& box,
                            const std::function<void(const BoundReport&)>& on_report = {});

}  // namespace ekr
