#include "ekr/family.hpp"

#include <algorithm>

#include "ekr/errors.hpp"

namespace ekr {

GroundSpec::GroundSpec(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxElements) {
    throw UsageError("ground set size n=" + std::to_string(n) + " outside [1," +
                     std::to_string(kMaxElements) + "]");
  }
  if (k < 0 || k > n) {
    throw UsageError("uniformity k=" + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
  }
}

KSet KSet::of(std::initializer_list<int> elements) {
  return from_elements(std::span<const int>(elements.begin(), elements.size()));
}

KSet KSet::from_elements(std::span<const int> elements) {
  SetWord bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxElements) throw UsageError("element " + std::to_string(e) + " out of range");
    if (bits & bit(e - 1)) throw UsageError("element " + std::to_string(e) + " repeated");
    bits |= bit(e - 1);
  }
  return KSet(bits);
}

KSet KSet::interval(int first, int last) {
  if (first > last) return KSet();
  if (first < 1 || last > kMaxElements) throw UsageError("interval out of range");
  return KSet(low_mask(last) & ~low_mask(first - 1));
}

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (SetWord w = bits_; w != 0; w &= w - 1) out.push_back(lowest_bit(w) + 1);
  return out;
}

std::string KSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::strong_ordering lex_cmp(KSet a, KSet b) {
  if (a.size() != b.size()) throw UsageError("lex_cmp: sets of different sizes");
  if (a == b) return std::strong_ordering::equal;
  return lex_less(a, b) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering lex_cmp(const GroundSpec& ground, KSet a, KSet b) {
  for (KSet s : {a, b}) {
    if (s.size() != ground.k() || !s.is_subset_of(KSet(ground.universe()))) {
      throw UsageError("lex_cmp: " + s.to_string() + " is not a k-set of the ground set");
    }
  }
  return lex_cmp(a, b);
}

Family::Family(GroundSpec ground, std::vector<KSet> sets) : ground_(ground), sets_(std::move(sets)) {
  const SetWord outside = ~ground_.universe();
  for (KSet s : sets_) {
    if (s.size() != ground_.k()) {
      throw UsageError("member " + s.to_string() + " does not have size " + std::to_string(ground_.k()));
    }
    if (s.bits() & outside) {
      throw UsageError("member " + s.to_string() + " has an element above n=" + std::to_string(ground_.n()));
    }
  }
  std::sort(sets_.begin(), sets_.end(), LexLess{});
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool Family::contains(KSet s) const noexcept {
  return std::binary_search(sets_.begin(), sets_.end(), s, LexLess{});
}

std::vector<KSet> all_ksets(int n, int k) {
  std::vector<KSet> out;
  if (k < 0 || k > n) return out;
  // Odometer over increasing tuples; this visits them in lex order.
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i + 1;
  while (true) {
    out.push_back(KSet::from_elements(t));
    int p = k - 1;
    while (p >= 0 && t[p] == n - k + p + 1) --p;
    if (p < 0) break;
    ++t[p];
    for (int q = p + 1; q < k; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

Family complete_family(const GroundSpec& ground) { return Family(ground, all_ksets(ground.n(), ground.k())); }

BigInt lex_rank(const GroundSpec& ground, KSet s) {
  if (s.size() != ground.k() || !s.is_subset_of(KSet(ground.universe()))) {
    throw UsageError("lex_rank: " + s.to_string() + " is not a k-set of the ground set");
  }
  const int n = ground.n();
  const int k = ground.k();
  BigInt rank = 0;
  int prev = 0;
  int pos = 1;
  for (int e : s.elements()) {
    for (int x = prev + 1; x < e; ++x) rank += binom(n - x, k - pos);
    prev = e;
    ++pos;
  }
  return rank;
}

KSet lex_unrank(const GroundSpec& ground, const BigInt& rank) {
  const int n = ground.n();
  const int k = ground.k();
  if (rank < 0 || rank >= binom(n, k)) throw DomainError("lex_unrank: rank out of range");
  BigInt r = rank;
  SetWord bits = 0;
  int x = 1;
  for (int pos = 1; pos <= k; ++pos) {
    // Sets whose pos-th element is x number C(n - x, k - pos).
    while (true) {
      BigInt count = binom(n - x, k - pos);
      if (r < count) break;
      r -= count;
      ++x;
    }
    bits |= bit(x - 1);
    ++x;
  }
  return KSet(bits);
}

Family lex_family(const GroundSpec& ground, std::uint64_t m) {
  if (BigInt(m) > binom(ground.n(), ground.k())) {
    throw DomainError("lex_family: m=" + std::to_string(m) + " exceeds C(n,k)");
  }
  std::vector<KSet> sets;
  sets.reserve(m);
  for (std::uint64_t r = 0; r < m; ++r) sets.push_back(lex_unrank(ground, BigInt(r)));
  return Family(ground, std::move(sets));
}

Family restrict(const Family& family, ElementSet included, ElementSet fixed) {
  if (!included.is_subset_of(fixed)) throw UsageError("restrict: P is not a subset of Q");
  if (!fixed.is_subset_of(KSet(family.ground().universe()))) throw UsageError("restrict: Q not within [n]");
  std::vector<KSet> out;
  for (KSet s : family) {
    if ((s & fixed) == included) out.push_back(s.minus(fixed));
  }
  return Family(GroundSpec(family.n(), family.k() - included.size()), std::move(out));
}

Family restrict_include(const Family& family, int element) {
  KSet d = KSet::of({element});
  return restrict(family, d, d);
}

Family restrict_exclude(const Family& family, int element) {
  return restrict(family, KSet(), KSet::of({element}));
}

Family shadow(const Family& family) {
  if (family.k() < 1) throw UsageError("shadow: requires k >= 1");
  std::vector<KSet> out;
  out.reserve(family.size() * family.k());
  for (KSet s : family) {
    for (SetWord w = s.bits(); w != 0; w &= w - 1) out.push_back(KSet(s.bits() & ~(w & (~w + 1))));
  }
  return Family(GroundSpec(family.n(), family.k() - 1), std::move(out));
}

std::vector<std::uint64_t> degree_vector(const Family& family) {
  std::vector<std::uint64_t> deg(family.n(), 0);
  for (KSet s : family) {
    for (SetWord w = s.bits(); w != 0; w &= w - 1) ++deg[lowest_bit(w)];
  }
  return deg;
}

std::size_t count_containing(const Family& family, ElementSet d) {
  return static_cast<std::size_t>(
      std::count_if(family.begin(), family.end(), [d](KSet s) { return d.is_subset_of(s); }));
}

}  // namespace ekr
