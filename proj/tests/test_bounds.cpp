#include "doctest.h"
#include "ekr/bounds.hpp"
#include "ekr/constructions.hpp"
#include "ekr/errors.hpp"
#include "ekr/measures.hpp"
#include "ekr/search.hpp"
#include "oracle.hpp"

using namespace ekr;

namespace {

/// Families A with A = S(S(A)), where S(X) is the set of b-sets meeting all
/// of X; these are the first halves of saturated pairs.
std::uint64_t count_saturated(int n, int a, int b) {
  const auto as = oracle::ksets(n, a), bs = oracle::ksets(n, b);
  std::vector<std::uint32_t> meet_ab(as.size(), 0), meet_ba(bs.size(), 0);
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (as[i] & bs[j]) {
        meet_ab[i] |= std::uint32_t{1} << j;
        meet_ba[j] |= std::uint32_t{1} << i;
      }
  auto closure = [](std::uint32_t x, const std::vector<std::uint32_t>& meet, std::size_t width) {
    std::uint32_t out = width == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
    for (std::uint32_t r = x; r; r &= r - 1) out &= meet[static_cast<std::size_t>(std::countr_zero(r))];
    return out;
  };
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << as.size()); ++x) {
    const auto fa = static_cast<std::uint32_t>(x);
    const std::uint32_t gb = closure(fa, meet_ab, bs.size());
    count += closure(gb, meet_ba, as.size()) == fa;
  }
  return count;
}

bool nontrivial(const Family& f) { return !f.empty() && !is_star(f); }

}  // namespace

TEST_CASE("closed forms") {
  CHECK(size_formula("g", {{"n", 18}, {"k", 3}}) == 10);
  CHECK(size_formula("hm", {{"n", 7}, {"k", 3}}) == 13);
  CHECK(size_formula("ekr", {{"n", 7}, {"k", 3}}) == 15);
  for (int k = 3; k <= 5; ++k)
    for (int n = 12; n <= 20; ++n)
      if (n > 2 * k) CHECK(g3_closed_form(n, k) <= g_family_size(n, k));
  for (int k = 3; k <= 5; ++k)
    for (int n = 2 * k + 1; n <= 14; ++n) {
      CHECK(g3_closed_form(n, k) == k_family_size(n, k, 3));
      CHECK(BigInt(k_family(GroundSpec(n, k), 3).size()) == g3_closed_form(n, k));
    }
  for (int k = 2; k <= 5; ++k)
    for (int n = 2 * k + 1; n <= 14; ++n) CHECK(BigInt(hilton_milner(GroundSpec(n, k)).size()) == hilton_milner_size(n, k));
  CHECK(size_formula("ar-gamma", {{"n", 10}, {"k", 4}, {"r", 2}}) == 21);
  CHECK_THROWS_AS(size_formula("g", {{"n", 18}}), UsageError);
  CHECK_THROWS_AS(size_formula("zzz", {{"n", 18}, {"k", 3}}), UsageError);
  CHECK_THROWS_AS(g_family_size(5, 3), DomainError);
  // |G(n,k)| / C(n-3,k-3) approaches k^2 - k + 1 from below
  const Rational r = g_family_leading_ratio(2000, 4);
  CHECK(r < 13);
  CHECK(r > make_rational(12, 1));
}

TEST_CASE("pointwise inequality checks") {
  BoundReport k1 = inequality_check("key1", {{"n", 10}, {"k", 2}, {"i", 3}});
  CHECK(k1.preconditions_met);
  CHECK(k1.lhs == 21);
  CHECK(k1.rhs == 18);
  CHECK(k1.holds);
  CHECK_FALSE(inequality_check("key1", {{"n", 6}, {"k", 2}, {"i", 3}}).preconditions_met);
  BoundReport b = inequality_check("binom", {{"n", 6}, {"a", 3}, {"b", 3}});
  CHECK(b.preconditions_met);
  CHECK(b.holds);
  CHECK(b.lhs == b.rhs);
  CHECK(inequality_check("prekey", {{"a", 2}, {"b", 5}}).holds);
  CHECK_FALSE(inequality_check("prekey", {{"a", 5}, {"b", 5}}).preconditions_met);
  CHECK_THROWS_AS(inequality_check("key1", {{"n", 10}, {"k", 2}}), UsageError);
  CHECK_THROWS_AS(inequality_check("nope", {}), UsageError);
  // the disjunction: |B| = 50 > C(10,1) but |A| = 1 <= C(10,0)
  BoundReport t = inequality_check("t-intersecting", {{"n", 10}, {"k", 2}, {"t", 1}, {"A", 1}, {"B", 50}});
  CHECK(t.preconditions_met);
  CHECK(t.holds);
}

TEST_CASE("family-level checks") {
  const Family star = full_star(GroundSpec(9, 3));
  BoundReport r = inequality_check("ft92", star, star);
  CHECK(r.preconditions_met);
  CHECK(r.lhs == 56);
  CHECK(r.rhs == 65);
  CHECK(r.holds);
  // a star pair is not non-trivial
  CHECK_FALSE(inequality_check("nontrivial", star, star).preconditions_met);
  const Family hm = hilton_milner(GroundSpec(9, 3));
  BoundReport nt = inequality_check("nontrivial", hm, hm);
  CHECK(nt.preconditions_met);
  CHECK(nt.holds);
  CHECK(nt.rhs == Rational(oracle::binom(9, 3) - 2 * oracle::binom(6, 3) + oracle::binom(3, 3) + 2));
  BoundReport k7 = inequality_check("gft92-7", hm, {{"r", 1}});
  CHECK(k7.preconditions_met);
  CHECK(k7.holds);
}

TEST_CASE("r-regime bounds") {
  const RRegimeBounds b = r_regime_bounds(10, 3, 4, 1);
  CHECK(b.small_r == 176);
  CHECK(b.small_r == oracle::binom(10, 4) - oracle::binom(8, 4) + oracle::binom(7, 3) + 1);
  for (int n = 8; n <= 16; ++n)
    for (int a = 2; a <= 4; ++a)
      for (int bb = a; bb <= 5 && a + bb <= n; ++bb) {
        BigInt prev = -1;
        for (int r = 1; r <= bb - 1; ++r) {
          const BigInt v = r_regime_bounds(n, a, bb, r).small_r;
          if (prev >= 0) CHECK(v <= prev);
          prev = v;
        }
        const BigInt large = r_regime_bounds(n, a, bb, bb).large_r;
        CHECK(large == oracle::binom(n, bb) - oracle::binom(n - a + 1, bb) + n - a + 1);
        CHECK(r_regime_applicable(n, a, bb, bb) == large);
      }
  CHECK_THROWS_AS(r_regime_bounds(5, 3, 3, 1), DomainError);
}

TEST_CASE("scans") {
  const auto box = parse_scan("n=5..200,k=2..20,i=2..6");
  REQUIRE(box.size() == 3);
  CHECK(box[0].name == "n");
  CHECK(box[0].lo == 5);
  CHECK(box[0].hi == 200);
  CHECK(parse_scan("k=3")[0].hi == 3);
  CHECK_THROWS_AS(parse_scan("n=5..x"), UsageError);
  CHECK_THROWS_AS(parse_scan("n"), UsageError);
  CHECK_THROWS_AS(scan_inequality("key1", parse_scan("n=1..5,k=1..5")), UsageError);
  const ScanSummary s = scan_inequality("key1", parse_scan("n=1..50,k=1..5,i=1..3"));
  CHECK(s.points == 750);
  CHECK(s.applicable == 660);
  CHECK(s.violations == 0);
  CHECK(scan_inequality("g3", parse_scan("n=7..120,k=3..12")).violations == 0);
}

TEST_CASE("saturated pair enumeration is complete") {
  for (int n = 4; n <= 6; ++n) {
    std::uint64_t seen = 0;
    const std::uint64_t c = for_each_saturated_pair(GroundSpec(n, 2), GroundSpec(n, 2), [&](const Family& a, const Family& b) {
      ++seen;
      REQUIRE(is_cross_intersecting(a, b));
    });
    CHECK(c == seen);
    CHECK(c == count_saturated(n, 2, 2));
  }
  CHECK(for_each_saturated_pair(GroundSpec(5, 2), GroundSpec(5, 3), nullptr) == count_saturated(5, 2, 3));
  CHECK(for_each_saturated_pair(GroundSpec(6, 3), GroundSpec(6, 3), nullptr) == count_saturated(6, 3, 3));
}

TEST_CASE("non-trivial pair bound on every saturated pair, a = b = 2, n <= 9") {
  for (int n = 5; n <= 9; ++n) {
    std::uint64_t applicable = 0;
    for_each_saturated_pair(GroundSpec(n, 2), GroundSpec(n, 2), [&](const Family& a, const Family& b) {
      const BoundReport r = inequality_check("nontrivial", a, b);
      const bool hyp = nontrivial(a) && nontrivial(b);
      REQUIRE(r.preconditions_met == hyp);
      if (!hyp) return;
      ++applicable;
      const oracle::Int rhs = oracle::binom(n, 2) - 2 * oracle::binom(n - 2, 2) + oracle::binom(n - 4, 2) + 2;
      REQUIRE(oracle::Int(a.size() + b.size()) <= rhs);
      REQUIRE(r.holds);
    });
    CHECK(applicable > 0);
  }
}
