#pragma once

// Ground sets, k-sets and k-uniform families over [n] = {1, ..., n}.
//
// Elements are 1-based everywhere in the public interface; internally element
// e occupies bit e - 1 of a SetWord.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ekr/binomial.hpp"
#include "ekr/bits.hpp"

namespace ekr {

/// The ambient binom([n], k). 0 <= k <= n <= kMaxElements, n >= 1.
/// k = 0 only arises for restrictions such as F(P, Q) with |P| = k.
class GroundSpec {
 public:
  GroundSpec(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  /// Bits of all elements of [n].
  SetWord universe() const noexcept { return low_mask(n_); }

  friend bool operator==(const GroundSpec&, const GroundSpec&) = default;

 private:
  int n_;
  int k_;
};

/// A subset of [n] stored as a bitmask; used both for members of a family
/// and for arbitrary element sets (patterns, transversals, witnesses).
class KSet {
 public:
  constexpr KSet() = default;
  constexpr explicit KSet(SetWord bits) noexcept : bits_(bits) {}

  /// From 1-based elements; throws UsageError for elements outside
  /// [1, kMaxElements] or repeated elements.
  static KSet of(std::initializer_list<int> elements);
  static KSet from_elements(std::span<const int> elements);
  /// The interval [first, last]; empty when first > last.
  static KSet interval(int first, int last);

  constexpr SetWord bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int element) const noexcept {
    return element >= 1 && element <= kMaxElements && (bits_ & bit(element - 1)) != 0;
  }
  /// Smallest / largest element; the set must be nonempty.
  constexpr int min_element() const noexcept { return lowest_bit(bits_) + 1; }
  constexpr int max_element() const noexcept { return highest_bit(bits_) + 1; }

  std::vector<int> elements() const;

  constexpr KSet with(int element) const noexcept { return KSet(bits_ | bit(element - 1)); }
  constexpr KSet without(int element) const noexcept { return KSet(bits_ & ~bit(element - 1)); }

  constexpr bool intersects(KSet other) const noexcept { return (bits_ & other.bits_) != 0; }
  constexpr int intersection_size(KSet other) const noexcept { return popcount(bits_ & other.bits_); }
  constexpr bool is_subset_of(KSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  constexpr KSet operator|(KSet o) const noexcept { return KSet(bits_ | o.bits_); }
  constexpr KSet operator&(KSet o) const noexcept { return KSet(bits_ & o.bits_); }
  constexpr KSet minus(KSet o) const noexcept { return KSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(KSet, KSet) noexcept = default;

  /// "{1,2,9}".
  std::string to_string() const;

 private:
  SetWord bits_ = 0;
};

/// Arbitrary element sets share the representation.
using ElementSet = KSet;

/// A <_L B: the smallest element of the symmetric difference lies in A.
/// No size check; for equal-size sets this is the lexicographic order on
/// increasing tuples.
constexpr bool lex_less(KSet a, KSet b) noexcept {
  SetWord diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

/// Three-way lex comparison; throws UsageError when |A| != |B|.
std::strong_ordering lex_cmp(KSet a, KSet b);
/// As above, additionally checking that both are k-sets of `ground`.
std::strong_ordering lex_cmp(const GroundSpec& ground, KSet a, KSet b);

struct LexLess {
  constexpr bool operator()(KSet a, KSet b) const noexcept { return lex_less(a, b); }
};

/// A k-uniform family: duplicate-free and stored in ascending lex order.
class Family {
 public:
  explicit Family(GroundSpec ground) : ground_(ground) {}
  /// Validates every member against `ground` (UsageError on wrong size or an
  /// element above n), then sorts and drops duplicates.
  Family(GroundSpec ground, std::vector<KSet> sets);

  const GroundSpec& ground() const noexcept { return ground_; }
  int n() const noexcept { return ground_.n(); }
  int k() const noexcept { return ground_.k(); }

  std::span<const KSet> sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }
  const KSet& operator[](std::size_t i) const noexcept { return sets_[i]; }

  /// Binary search in lex order.
  bool contains(KSet s) const noexcept;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  GroundSpec ground_;
  std::vector<KSet> sets_;
};

/// P subset of Q subset of [n], selecting F(P, Q).
struct Pattern {
  ElementSet included;  // P
  ElementSet fixed;     // Q
};

/// All k-subsets of [n] in lex order.
std::vector<KSet> all_ksets(int n, int k);
/// binom([n], k) as a family.
Family complete_family(const GroundSpec& ground);

/// 0-based position of `s` in the lex order of binom([n], k).
BigInt lex_rank(const GroundSpec& ground, KSet s);
/// Inverse of lex_rank; DomainError when rank >= C(n, k).
KSet lex_unrank(const GroundSpec& ground, const BigInt& rank);
/// L(n, k, m): the first m k-sets in lex order. DomainError unless
/// 0 <= m <= C(n, k).
Family lex_family(const GroundSpec& ground, std::uint64_t m);

/// F(P, Q) = {F \ Q : F ∩ Q = P}. The result keeps the labels of [n]; its
/// members avoid Q and have size k - |P|. UsageError unless P ⊆ Q ⊆ [n].
Family restrict(const Family& family, ElementSet included, ElementSet fixed);
inline Family restrict(const Family& family, const Pattern& p) {
  return restrict(family, p.included, p.fixed);
}
/// F(i) = F({i}, {i}).
Family restrict_include(const Family& family, int element);
/// F(ī) = F(∅, {i}).
Family restrict_exclude(const Family& family, int element);

/// ∂F: all (k-1)-subsets of members. Requires k >= 1.
Family shadow(const Family& family);

/// Entry i - 1 is the number of members containing i.
std::vector<std::uint64_t> degree_vector(const Family& family);

/// Number of members containing every element of `d` (|F(D)| with D ⊆ F).
std::size_t count_containing(const Family& family, ElementSet d);

}  // namespace ekr

template <>
struct std::hash<ekr::KSet> {
  std::size_t operator()(ekr::KSet s) const noexcept {
    auto v = s.bits();
#ifdef EKR_WIDE_SETS
    auto lo = static_cast<std::uint64_t>(v);
    auto hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
#else
    return std::hash<std::uint64_t>{}(v);
#endif
  }
};
