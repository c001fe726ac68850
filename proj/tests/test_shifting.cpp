#include <random>

#include "doctest.h"
#include "ekr/constructions.hpp"
#include "ekr/errors.hpp"
#include "ekr/measures.hpp"
#include "ekr/search.hpp"
#include "ekr/shifting.hpp"
#include "oracle.hpp"

using namespace ekr;

namespace {

Family fam(int n, int k, std::vector<std::vector<int>> sets) {
  std::vector<KSet> v;
  for (const auto& s : sets) v.push_back(KSet::from_elements(s));
  return Family(GroundSpec(n, k), v);
}

PairGraph graph(int n, std::vector<std::pair<int, int>> edges) {
  PairGraph h(n);
  for (auto [u, v] : edges) h.add(u, v);
  return h;
}

Family fano_lines_family() {
  std::vector<KSet> v(fano_lines().begin(), fano_lines().end());
  return Family(GroundSpec(7, 3), v);
}

/// Saturated in the test's own sense: nothing can be added on either side.
bool saturated(const oracle::Sets& f, const oracle::Sets& g, int n, int a, int b) {
  for (auto s : oracle::ksets(n, a))
    if (!std::binary_search(f.begin(), f.end(), s) && oracle::hits_all(s, g)) return false;
  for (auto s : oracle::ksets(n, b))
    if (!std::binary_search(g.begin(), g.end(), s) && oracle::hits_all(s, f)) return false;
  return true;
}

}  // namespace

TEST_CASE("shift") {
  CHECK(shift(fam(3, 2, {{2, 3}}), 1, 2) == fam(3, 2, {{1, 3}}));
  CHECK(shift(fam(3, 2, {{2, 3}, {1, 3}}), 1, 2) == fam(3, 2, {{2, 3}, {1, 3}}));
  const Family star = full_star(GroundSpec(7, 3));
  for (int j = 2; j <= 7; ++j) CHECK(shift(star, 1, j) == star);
  CHECK_THROWS_AS(shift(star, 2, 2), UsageError);
  CHECK_THROWS_AS(shift(star, 3, 2), UsageError);
  CHECK_THROWS_AS(shift(star, 1, 8), UsageError);
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const int n = 5 + static_cast<int>(rng() % 4);
    oracle::Sets s;
    for (auto m : oracle::ksets(n, 3))
      if (rng() % 3 == 0) s.push_back(m);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const int j = i + 1 + static_cast<int>(rng() % (n - i));
    REQUIRE(oracle::same(oracle::masks(shift(oracle::family(n, 3, s), i, j)), oracle::shift(s, i, j)));
  }
}

TEST_CASE("weight") {
  CHECK(weight(fam(4, 2, {{1, 2}, {3, 4}})) == 10);
  CHECK(weight(Family(GroundSpec(4, 2))) == 0);
  CHECK(weight(lex_family(GroundSpec(5, 2), 4)) == 18);
}

TEST_CASE("initial families") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const auto total = static_cast<std::uint64_t>(binom(n, k));
      for (std::uint64_t m = 0; m <= total; ++m) {
        const Family l = lex_family(GroundSpec(n, k), m);
        REQUIRE(is_initial_by_order(l));
        REQUIRE(is_initial_by_shifts(l));
      }
    }
  CHECK_FALSE(is_initial(fam(3, 2, {{2, 3}})));
  CHECK_FALSE(is_initial(fam(6, 2, {{2, 3}})));
  CHECK(is_initial(full_star(GroundSpec(7, 3))));
  CHECK_FALSE(is_initial(fano_lines_family()));
}

TEST_CASE("two-cover graph") {
  const PairGraph h = two_cover_graph(full_star(GroundSpec(6, 3)));
  CHECK(h.edge_count() == 5);
  for (int j = 2; j <= 6; ++j) CHECK(h.contains(1, j));
  // {12} and {34} are both met by {1,3}, {1,4}, {2,3}, {2,4}
  const PairGraph h2 = two_cover_graph(fam(6, 2, {{1, 2}, {3, 4}}));
  CHECK(h2.edges() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(oracle::two_cover(oracle::masks(fam(6, 2, {{1, 2}, {3, 4}})), 6) == h2.edges());
  CHECK(two_cover_graph(fano_lines_family()).empty());
}

TEST_CASE("partial shiftedness") {
  CHECK(is_partially_shifted(graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})));
  auto v = partial_shift_violation(graph(3, {{2, 3}}));
  REQUIRE(v.has_value());
  CHECK(v->i == 2);
  CHECK(v->j == 3);
  CHECK(v->x == 1);
  CHECK(is_partially_shifted(PairGraph(5)));
}

TEST_CASE("bipartite decomposition") {
  auto b = bipartite_decomposition(graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  REQUIRE(b.has_value());
  CHECK(b->x == KSet::of({1, 2}));
  CHECK(b->y == KSet::of({3, 4}));
  CHECK_FALSE(bipartite_decomposition(graph(3, {{1, 2}, {1, 3}, {2, 3}})).has_value());
  auto star = bipartite_decomposition(graph(5, {{1, 2}, {1, 3}}));
  REQUIRE(star.has_value());
  CHECK(star->x == KSet::of({1}));
  CHECK(star->y == KSet::of({2, 3}));
  CHECK_FALSE(bipartite_decomposition(graph(4, {{1, 3}, {1, 4}, {2, 3}})).has_value());
  CHECK_FALSE(bipartite_decomposition(graph(5, {{1, 2}, {1, 4}})).has_value());
}

TEST_CASE("ad extremis on an initial input is a fixpoint") {
  for (const Family& f : {full_star(GroundSpec(7, 3)), lex_family(GroundSpec(7, 3), 20)}) {
    const AdExtremisResult r = shift_ad_extremis(f, MinCover{1});
    CHECK(r.f == f);
    CHECK(r.h.empty());
    CHECK(r.trace.steps.empty());
    CHECK(r.trace.passes == 1);
    CHECK_FALSE(r.global_minimality_verified);
  }
}

TEST_CASE("ad extremis on the Fano lines under tau >= 3") {
  const Family lines = fano_lines_family();
  const AdExtremisResult r = shift_ad_extremis(lines, MinCover{3});
  const auto out = oracle::masks(r.f);
  CHECK(out.size() == 7);
  CHECK(oracle::intersecting(out));
  CHECK(oracle::cover_number(out, 7) >= 3);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      const auto shifted = oracle::shift(out, i, j);
      if (oracle::same(shifted, out)) {
        CHECK_FALSE(r.h.contains(i, j));
      } else {
        CHECK(oracle::cover_number(shifted, 7) < 3);
        CHECK(r.h.contains(i, j));
      }
    }
  CHECK(shift_resistant_graph(r.f, MinCover{3}) == r.h);
}

TEST_CASE("the triangle is initial, so it is its own fixpoint") {
  const Family t = fam(3, 2, {{1, 2}, {1, 3}, {2, 3}});
  const AdExtremisResult r = shift_ad_extremis(t, MinCover{2});
  CHECK(r.f == t);
  CHECK(r.trace.steps.empty());
  CHECK(r.h.empty());
  const Family t5 = fam(5, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(shift_ad_extremis(t5, MinCover{2}).h.empty());
}

TEST_CASE("ad extremis errors and properties") {
  const Family star = full_star(GroundSpec(6, 3));
  CHECK_THROWS_AS(shift_ad_extremis(star, MinCover{2}), DomainError);
  CHECK_THROWS_AS(shift_ad_extremis(star, full_star(GroundSpec(7, 3)), MinCover{1}), DomainError);
  CHECK_THROWS_AS(shift_resistant_graph(fano_lines_family(), MinCover{1}), UsageError);
  CHECK(describe(parse_property("mincover=3")) == "mincover=3");
  CHECK(describe(parse_property("maxrho=1/2")) == "maxrho=1/2");
  CHECK(describe(parse_property("nontrivial")) == "nontrivial");
  CHECK_THROWS_AS(parse_property("bogus"), UsageError);
  CHECK_THROWS_AS(parse_property("mincover=x"), UsageError);
  const CustomProperty big{"size>=3", [](const Family& f, const Family&) { return f.size() >= 3; }};
  CHECK(satisfies(big, star, star));
  CHECK(describe(big) == "size>=3");
}

TEST_CASE("ad extremis on pairs keeps cross-intersection and leaves H inside the 2-cover graph") {
  std::mt19937_64 rng(5);
  int hypotheses = 0, bipartite_cases = 0;
  for (int round = 0; round < 150; ++round) {
    const int n = 7 + static_cast<int>(rng() % 4);
    const auto all = oracle::ksets(n, 3);
    const Family seed_f = oracle::family(n, 3, {all[rng() % all.size()]});
    oracle::Sets gs;
    for (auto s : all)
      if ((s & static_cast<oracle::Mask>(seed_f[0].bits())) && rng() % 5 == 0) gs.push_back(s);
    if (gs.empty()) continue;
    const SaturatedPair sp = saturate_pair(seed_f, oracle::family(n, 3, gs));
    if (oracle::cover_number(oracle::masks(sp.f), n) < 2) continue;
    const AdExtremisResult r = shift_ad_extremis(sp.f, sp.g, MinCover{2});
    const auto f = oracle::masks(r.f), g = oracle::masks(r.g);
    REQUIRE(oracle::cross(f, g));
    REQUIRE(oracle::cover_number(f, n) >= 2);
    const PairGraph hat = two_cover_graph(r.f);
    REQUIRE(r.h.is_subgraph_of(hat));
    // saturated and not both initial: the 2-cover graph is partially shifted
    if (!saturated(f, g, n, 3, 3) || (is_initial(r.f) && is_initial(r.g))) continue;
    ++hypotheses;
    CHECK(is_partially_shifted(hat));
    if (auto b = bipartite_decomposition(hat)) {
      ++bipartite_cases;
      for (auto s : f) CHECK(((s & b->x.bits()) == b->x.bits() || (s & b->y.bits()) == b->y.bits()));
    }
  }
  MESSAGE("saturated non-initial outputs: " << hypotheses << ", bipartite: " << bipartite_cases);
  CHECK(hypotheses > 0);
}

TEST_CASE("saturate_pair") {
  const Family star = full_star(GroundSpec(7, 3));
  const SaturatedPair s = saturate_pair(star, star);
  CHECK(s.f == star);
  CHECK(s.g == star);
  CHECK(s.rule == "alternating-lex");
  const Family one = fam(4, 2, {{1, 2}});
  const SaturatedPair p = saturate_pair(one, one);
  // first pass on F adds every 2-set meeting {1,2}, after which G can only hold {1,2}
  CHECK(p.f == fam(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(p.g == one);
  CHECK(saturated(oracle::masks(p.f), oracle::masks(p.g), 4, 2, 2));
  CHECK(oracle::cross(oracle::masks(p.f), oracle::masks(p.g)));
  CHECK_THROWS_AS(saturate_pair(Family(GroundSpec(4, 2)), Family(GroundSpec(4, 2))), DomainError);
  CHECK_THROWS_AS(saturate_pair(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})), DomainError);
  std::mt19937_64 rng(9);
  for (int round = 0; round < 40; ++round) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const auto a = oracle::ksets(n, 2), b = oracle::ksets(n, 3);
    const oracle::Sets f0 = {a[rng() % a.size()]};
    oracle::Sets g0;
    for (auto s : b)
      if ((s & f0[0]) && rng() % 4 == 0) g0.push_back(s);
    if (g0.empty()) continue;
    const SaturatedPair sp = saturate_pair(oracle::family(n, 2, f0), oracle::family(n, 3, g0));
    REQUIRE(saturated(oracle::masks(sp.f), oracle::masks(sp.g), n, 2, 3));
    REQUIRE(oracle::cross(oracle::masks(sp.f), oracle::masks(sp.g)));
  }
}

TEST_CASE("fullness") {
  CHECK(is_full(full_star(GroundSpec(7, 3)), KSet::of({1})));
  CHECK_FALSE(is_full(hilton_milner(GroundSpec(7, 3)), KSet::of({1})));
  CHECK(is_full(complete_family(GroundSpec(6, 3)), KSet{}));
  CHECK_THROWS_AS(is_full(full_star(GroundSpec(7, 3)), KSet::of({1, 2, 3, 4})), UsageError);
}
