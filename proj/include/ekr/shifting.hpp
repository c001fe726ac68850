#pragma once

// Shifts S_ij, the weight w, shifting ad extremis under a preserved property,
// the shift-resistant graph H, the 2-cover graph Ĥ and related graph tests,
// saturation of cross-intersecting pairs, and fullness.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ekr/binomial.hpp"
#include "ekr/family.hpp"

namespace ekr {

/// S_ij(F): replaces j by i in each member containing j but not i, unless
/// the image is already present. UsageError unless 1 <= i < j <= n.
Family shift(const Family& family, int i, int j);

/// w(F) = sum over members of the sum of their elements.
std::uint64_t weight(const Family& family);

/// S_ij(F) = F for all i < j.
bool is_initial_by_shifts(const Family& family);
/// Closed under immediate predecessors in the coordinatewise order ≺
/// (lower one element by one, staying a set).
bool is_initial_by_order(const Family& family);
/// Initial (shifted) family; the two criteria above always agree.
inline bool is_initial(const Family& family) { return is_initial_by_order(family); }

// --- Preserved properties ---------------------------------------------------

/// τ(F) >= s on the first family.
struct MinCover {
  int s = 1;
};
/// F nonempty and ϱ(F) <= c on the first family.
struct MaxRho {
  Rational c;
};
/// τ(F) >= 2 and τ(G) >= 2 (both nonempty, neither a star).
struct NonTrivialBoth {};
struct CustomProperty {
  std::string name;
  std::function<bool(const Family&, const Family&)> predicate;
};
using PreservedProperty = std::variant<MinCover, MaxRho, NonTrivialBoth, CustomProperty>;

/// Evaluates P on the pair (F, G); single-family callers pass F twice.
bool satisfies(const PreservedProperty& property, const Family& f, const Family& g);
/// "mincover=3", "maxrho=1/2", "nontrivial", or the custom name.
std::string describe(const PreservedProperty& property);
/// Inverse of describe for the built-in kinds. UsageError otherwise.
PreservedProperty parse_property(std::string_view text);

// --- Pair graphs ------------------------------------------------------------

/// Simple graph on [n], stored as adjacency bitmasks.
class PairGraph {
 public:
  explicit PairGraph(int n);

  int n() const noexcept { return n_; }
  /// UsageError for a loop or a vertex outside [n].
  void add(int u, int v);
  bool contains(int u, int v) const noexcept;
  ElementSet neighbours(int v) const noexcept { return ElementSet(adj_[v - 1]); }
  std::size_t edge_count() const noexcept;
  bool empty() const noexcept { return edge_count() == 0; }
  /// Edges (u, v), u < v, in lex order.
  std::vector<std::pair<int, int>> edges() const;
  bool is_subgraph_of(const PairGraph& other) const noexcept;
  bool is_triangle_free() const noexcept;

  friend bool operator==(const PairGraph&, const PairGraph&) = default;

 private:
  int n_;
  std::vector<SetWord> adj_;
};

/// Ĥ(F): pairs {i, j} with F(ī, j̄) = ∅, i.e. every member meets {i, j}.
PairGraph two_cover_graph(const Family& family);

struct PartialShiftViolation {
  int i = 0;
  int j = 0;
  int x = 0;
};

/// Checks: {i, j} in H, x < j, x != i and {x, j} not in H imply {i, x} in H
/// (the image of {i, j} under S_xj). Either endpoint may play j, so i > j
/// is allowed. Returns the lex-first violating (i, j, x), or nothing when H
/// is partially shifted.
std::optional<PartialShiftViolation> partial_shift_violation(const PairGraph& h);
inline bool is_partially_shifted(const PairGraph& h) { return !partial_shift_violation(h).has_value(); }

struct Bipartition {
  ElementSet x;  // the side containing 1
  ElementSet y;
};

/// (X, Y) when H is exactly the complete bipartite graph between X and Y and
/// X ∪ Y = [|X| + |Y|]; nothing otherwise (including H = ∅).
std::optional<Bipartition> bipartite_decomposition(const PairGraph& h);

// --- Shifting ad extremis ---------------------------------------------------

enum class AppliedTo { f, g, both };
std::string_view applied_to_name(AppliedTo a);

struct ShiftStep {
  int i = 0;
  int j = 0;
  AppliedTo applied_to = AppliedTo::both;
  std::uint64_t weight_before = 0;  // w(F) + w(G) (just w(F) for one family)
  std::uint64_t weight_after = 0;
};

struct ShiftTrace {
  std::vector<ShiftStep> steps;
  int passes = 0;  // full lex sweeps, including the final one that applied nothing
};

struct AdExtremisResult {
  Family f;
  Family g;
  PairGraph h;
  ShiftTrace trace;
  /// Only condition (i) of the definition is established; weight minimality
  /// over all same-size families with the property is never checked.
  bool global_minimality_verified = false;
};

/// Repeated lex sweeps over 1 <= i < j <= n. At each pair both families are
/// shifted tentatively and the shift is applied when it changes something
/// and the shifted pair still satisfies P. Stops after a sweep that applies
/// nothing. DomainError if (F, G) does not satisfy P or the grounds differ
/// in n.
AdExtremisResult shift_ad_extremis(const Family& f, const Family& g, const PreservedProperty& property);
/// One family: shifts F alone and evaluates P on (F, F). The result has g = f.
AdExtremisResult shift_ad_extremis(const Family& f, const PreservedProperty& property);

/// Pairs {i, j} with S_ij(F) != F or S_ij(G) != G. UsageError if for some
/// such pair the shifted pair still satisfies P (not a fixpoint).
PairGraph shift_resistant_graph(const Family& f, const Family& g, const PreservedProperty& property);
PairGraph shift_resistant_graph(const Family& f, const PreservedProperty& property);

// --- Saturation and fullness --------------------------------------------------

struct SaturatedPair {
  Family f;
  Family g;
  std::string rule = "alternating-lex";
};

/// Extends a cross-intersecting pair to a saturated one: alternately scan
/// every candidate of F's ground, then G's, in lex order, adding each legal
/// set, until a full round adds nothing. The uniformities may differ.
/// DomainError if both are empty, if they are not cross-intersecting or if
/// their n differ.
SaturatedPair saturate_pair(const Family& f, const Family& g);

/// F(D) = binom([n] \ D, k - |D|), i.e. every k-set containing D is in F.
/// UsageError when |D| > k.
bool is_full(const Family& family, ElementSet d);

}  // namespace ekr
