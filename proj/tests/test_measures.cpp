#include <random>

#include "doctest.h"
#include "ekr/constructions.hpp"
#include "ekr/errors.hpp"
#include "ekr/measures.hpp"
#include "oracle.hpp"

using namespace ekr;

namespace {

Family fano_lines_family() {
  std::vector<KSet> v(fano_lines().begin(), fano_lines().end());
  return Family(GroundSpec(7, 3), v);
}

Family pair_12_34(int n) { return Family(GroundSpec(n, 2), {KSet::of({1, 2}), KSet::of({3, 4})}); }

oracle::Sets random_family(std::mt19937_64& rng, int n, int k) {
  const auto all = oracle::ksets(n, k);
  oracle::Sets f;
  for (auto s : all)
    if (rng() % 3 == 0) f.push_back(s);
  if (f.empty()) f.push_back(all.front());
  return f;
}

}  // namespace

TEST_CASE("intersection predicates") {
  CHECK(is_intersecting(full_star(GroundSpec(7, 3))));
  CHECK_FALSE(is_intersecting(pair_12_34(4)));
  CHECK(is_intersecting(g_family(GroundSpec(18, 3))));
  CHECK(is_intersecting(Family(GroundSpec(4, 2))));
  const Family star = full_star(GroundSpec(6, 3));
  CHECK(is_cross_t_intersecting(star, star, 1));
  const Family a(GroundSpec(4, 2), {KSet::of({1, 2})}), b(GroundSpec(4, 2), {KSet::of({3, 4})});
  CHECK_FALSE(is_cross_intersecting(a, b));
  CHECK_THROWS_AS(is_cross_intersecting(a, Family(GroundSpec(5, 2))), UsageError);
  CHECK(is_star(star));
  CHECK_FALSE(is_star(fano_lines_family()));
}

TEST_CASE("covering number") {
  CHECK(covering_number(full_star(GroundSpec(8, 3))).size == 1);
  CHECK(covering_number(full_star(GroundSpec(8, 3))).witness == KSet::of({1}));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{12, 3}, {14, 3}, {18, 3}, {12, 4}, {15, 4}, {18, 4}})
    CHECK(covering_number(g_family(GroundSpec(n, k))).size == 3);
  const Family lines = fano_lines_family();
  CHECK(covering_number(lines).size == 3);
  CHECK(oracle::cover_number(oracle::masks(lines), 7) == 3);
  CHECK_THROWS_AS(covering_number(Family(GroundSpec(5, 2))), DomainError);
  CHECK_THROWS_AS(covering_number(lines, 1), BudgetExceeded);
}

TEST_CASE("transversals") {
  const Family t1 = transversals(full_star(GroundSpec(6, 3)), 1);
  CHECK(t1.size() == 1);
  CHECK(t1[0] == KSet::of({1}));
  CHECK(transversals(pair_12_34(5), 1).empty());
  // G(n,4): the listed 3-transversals; for k = 3 the three B-sets are transversals too
  const Family g4 = g_family(GroundSpec(12, 4));
  oracle::Sets listed = {oracle::range(1, 3)};
  for (int u = 2; u <= 5; ++u)
    for (int v = 6; v <= 8; ++v) listed.push_back(oracle::el(1) | oracle::el(u) | oracle::el(v));
  CHECK(oracle::same(oracle::masks(transversals(g4, 3)), listed));
  const Family g3 = g_family(GroundSpec(12, 3));
  oracle::Sets listed3 = {oracle::range(1, 3)};
  for (int u = 2; u <= 4; ++u)
    for (int v = 5; v <= 6; ++v) listed3.push_back(oracle::el(1) | oracle::el(u) | oracle::el(v));
  for (KSet b : g_family_b_sets(3)) listed3.push_back(static_cast<oracle::Mask>(b.bits()));
  CHECK(oracle::same(oracle::masks(transversals(g3, 3)), listed3));
  CHECK(oracle::same(oracle::masks(transversals(g3, 3)), oracle::transversals(oracle::masks(g3), 12, 3)));
  CHECK_THROWS_AS(transversals(g3, 0), UsageError);
}

TEST_CASE("diversity, degree and ratio") {
  CHECK(diversity(hilton_milner(GroundSpec(9, 3))) == 1);
  CHECK(diversity(full_star(GroundSpec(9, 3))) == 0);
  CHECK(diversity(a_r_family(GroundSpec(10, 4), 2)) == 21);
  CHECK(diversity(Family(GroundSpec(5, 2))) == 0);
  CHECK(rho(full_star(GroundSpec(9, 4))).value == 1);
  CHECK(rho(fano_family(GroundSpec(10, 3))).value == make_rational(3, 7));
  const Family f104 = fano_family(GroundSpec(10, 4));
  CHECK(f104.size() == 21);
  CHECK(max_degree(f104) == 9);
  CHECK(rho(f104).value == make_rational(3, 7));
  CHECK(rho(f104).element == 1);
  CHECK_THROWS_AS(rho(Family(GroundSpec(5, 2))), DomainError);
}

TEST_CASE("clique number") {
  const Clique c = clique_number(full_star(GroundSpec(6, 3)));
  CHECK(c.size == 3);
  CHECK(c.witness == KSet::of({1, 2, 3}));
  CHECK(clique_number(k_family(GroundSpec(10, 3), 2)).size >= 4);
  CHECK(clique_number(Family(GroundSpec(8, 4), {KSet::of({2, 4, 6, 8})})).size == 4);
  // binom([5],2) has clique number 5
  CHECK(clique_number(complete_family(GroundSpec(5, 2))).size == 5);
  CHECK_THROWS_AS(clique_number(Family(GroundSpec(5, 2))), DomainError);
}

TEST_CASE("measures agree with brute force on random families") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const int n = 4 + static_cast<int>(rng() % 5), k = 2 + static_cast<int>(rng() % 2);
    const auto sets = random_family(rng, n, k);
    const Family f = oracle::family(n, k, sets);
    REQUIRE(covering_number(f).size == oracle::cover_number(sets, n));
    const auto t = oracle::transversals(sets, n, covering_number(f).size);
    REQUIRE(static_cast<oracle::Mask>(covering_number(f).witness.bits()) == t.front());
    REQUIRE(max_degree(f) == oracle::max_degree(sets, n));
    REQUIRE(is_intersecting(f) == oracle::intersecting(sets));
  }
}

TEST_CASE("theorem predicates") {
  const Rational eps = make_rational(1, 24);
  auto find = [](const std::vector<TheoremCheck>& v, const std::string& name) {
    for (const auto& c : v)
      if (c.name == name) return c;
    FAIL("missing " << name);
    return TheoremCheck{};
  };
  // the boundary n = 48k needs n > 64 and is covered by the wide build
  CHECK_FALSE(find(theorem_predicates(hilton_milner(GroundSpec(9, 3)), eps), "main0").hypotheses_met);
  CHECK_FALSE(find(theorem_predicates(g_family(GroundSpec(54, 3)), eps), "main3").hypotheses_met);
  auto m1 = find(theorem_predicates(full_star(GroundSpec(12, 3)), eps), "main1");
  CHECK(m1.hypotheses_met);
  CHECK(m1.conclusion_holds == true);
  // k = 2: n >= k / eps = 48 and the size threshold 48 C(n-3,-1) is 0
  auto m2 = find(theorem_predicates(full_star(GroundSpec(48, 2)), eps), "main2");
  CHECK(m2.hypotheses_met);
  CHECK(m2.conclusion_holds == true);
  CHECK_FALSE(find(theorem_predicates(full_star(GroundSpec(47, 2)), eps), "main2").hypotheses_met);
  CHECK_THROWS_AS(theorem_predicates(pair_12_34(4), eps), UsageError);
}

TEST_CASE("measure report") {
  const MeasureReport r = measure(g_family(GroundSpec(18, 3)));
  CHECK(r.size == 10);
  CHECK(r.intersecting);
  CHECK(r.tau->size == 3);
  CHECK(r.gamma + r.delta == 10);
  const MeasureReport e = measure(Family(GroundSpec(6, 3)));
  CHECK(e.size == 0);
  CHECK_FALSE(e.tau.has_value());
  CHECK_FALSE(e.rho.has_value());
  CHECK_FALSE(e.omega.has_value());
}
