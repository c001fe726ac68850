#include <sstream>

#include "doctest.h"
#include "ekr/errors.hpp"
#include "ekr/family.hpp"
#include "ekr/family_io.hpp"
#include "oracle.hpp"

using namespace ekr;

namespace {

Family fam(int n, int k, std::vector<std::vector<int>> sets) {
  std::vector<KSet> v;
  for (const auto& s : sets) v.push_back(KSet::from_elements(s));
  return Family(GroundSpec(n, k), v);
}

}  // namespace

TEST_CASE("binom values and Pascal") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(-2, 1) == 0);
  for (int n = 2; n <= 60; ++n)
    for (int k = 1; k < n; ++k) REQUIRE(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
  CHECK(binom(200, 100) == oracle::binom(200, 100));
  CHECK(binom_u64(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binom_u64(200, 100), DomainError);
}

TEST_CASE("lex_cmp") {
  CHECK(lex_cmp(KSet::of({1, 2, 9}), KSet::of({1, 3, 4})) == std::strong_ordering::less);
  CHECK(lex_cmp(KSet::of({1, 2, 3}), KSet::of({1, 2, 3})) == std::strong_ordering::equal);
  CHECK(lex_cmp(KSet::of({2, 3, 4}), KSet::of({1, 5, 6})) == std::strong_ordering::greater);
  CHECK_THROWS_AS(lex_cmp(KSet::of({1, 2}), KSet::of({1, 2, 3})), UsageError);
  CHECK_THROWS_AS(lex_cmp(GroundSpec(5, 3), KSet::of({1, 2, 9}), KSet::of({1, 2, 3})), UsageError);
}

TEST_CASE("all_ksets is the lex order of the oracle") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto got = all_ksets(n, k);
      const auto want = oracle::ksets(n, k);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(static_cast<oracle::Mask>(got[i].bits()) == want[i]);
    }
}

TEST_CASE("lex_family") {
  CHECK(lex_family(GroundSpec(4, 2), 4) == fam(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}));
  CHECK(lex_family(GroundSpec(5, 2), 4) == fam(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  std::vector<KSet> v;
  for (KSet s : all_ksets(10, 3))
    if (s.contains(1)) v.push_back(s);
  const Family star(GroundSpec(10, 3), v);
  CHECK(lex_family(GroundSpec(10, 3), 36) == star);
  CHECK(lex_family(GroundSpec(4, 2), 0).empty());
  CHECK_THROWS_AS(lex_family(GroundSpec(4, 2), 7), DomainError);
}

TEST_CASE("lex rank and unrank") {
  const GroundSpec g(9, 3);
  std::uint64_t r = 0;
  for (KSet s : all_ksets(9, 3)) {
    REQUIRE(lex_rank(g, s) == r);
    REQUIRE(lex_unrank(g, r) == s);
    ++r;
  }
  CHECK(lex_rank(g, KSet::of({1, 2, 9})) == 6);
  CHECK_THROWS_AS(lex_unrank(g, 84), DomainError);
  CHECK(lex_unrank(GroundSpec(60, 30), binom(60, 30) - 1) == KSet::interval(31, 60));
}

TEST_CASE("restrict") {
  const Family f = fam(5, 3, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
  const Family f1 = restrict_include(f, 1);
  CHECK(f1.k() == 2);
  CHECK(oracle::same(oracle::masks(f1), {oracle::range(2, 3), oracle::el(2) | oracle::el(4)}));
  CHECK(oracle::masks(restrict_exclude(f, 1)) == oracle::Sets{oracle::range(3, 5)});
  CHECK(restrict(f, KSet{}, KSet{}) == f);
  const Family g = fam(5, 3, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}});
  const Family r = restrict(g, KSet::of({4, 5}), KSet::of({3, 4, 5}));
  CHECK(r.k() == 1);
  CHECK(oracle::same(oracle::masks(r), {oracle::el(1), oracle::el(2)}));
  CHECK_THROWS_AS(restrict(g, KSet::of({1}), KSet::of({2})), UsageError);
}

TEST_CASE("shadow") {
  CHECK(oracle::same(oracle::masks(shadow(fam(4, 3, {{1, 2, 3}}))),
                     {oracle::range(1, 2), oracle::el(1) | oracle::el(3), oracle::range(2, 3)}));
  CHECK(shadow(Family(GroundSpec(4, 3))).empty());
  CHECK(shadow(fam(4, 3, {{1, 2, 3}, {1, 2, 4}})).size() == 5);
}

TEST_CASE("degree_vector") {
  auto d = degree_vector(fam(5, 3, {{1, 2, 3}}));
  CHECK(d == std::vector<std::uint64_t>{1, 1, 1, 0, 0});
  d = degree_vector(fam(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  CHECK(d == std::vector<std::uint64_t>{4, 1, 1, 1, 1});
  auto lines = fam(7, 3, {{1, 2, 3}, {1, 5, 6}, {3, 4, 5}, {1, 4, 7}, {2, 5, 7}, {3, 6, 7}, {2, 4, 6}});
  CHECK(degree_vector(lines) == std::vector<std::uint64_t>(7, 3));
  CHECK(count_containing(lines, KSet::of({1, 2})) == 1);
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(fam(4, 2, {{1, 2, 3}}), UsageError);
  CHECK_THROWS_AS(fam(4, 2, {{1, 5}}), UsageError);
  CHECK_THROWS_AS(KSet::of({1, 1}), UsageError);
  CHECK(fam(4, 2, {{2, 3}, {1, 2}, {2, 3}}).size() == 2);
  CHECK_THROWS_AS(GroundSpec(0, 0), UsageError);
  CHECK_THROWS_AS(GroundSpec(3, 4), UsageError);
}

TEST_CASE("family io round trip") {
  const Family f = fam(9, 3, {{1, 2, 3}, {2, 5, 9}, {1, 4, 7}});
  for (FamilyFormat fmt : {FamilyFormat::text, FamilyFormat::bits}) {
    const std::string text = format_family(f, fmt);
    CHECK(parse_family(text, fmt) == f);
    CHECK(format_family(parse_family(text, fmt), fmt) == text);
  }
  CHECK(format_family(f) == "9 3\n1 2 3\n1 4 7\n2 5 9\n");
  CHECK(format_family(f, FamilyFormat::bits) == "9 3\n7\n49\n112\n");
}

TEST_CASE("family io rejects malformed input") {
  CHECK_THROWS_AS(parse_family("4 2\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_family("4 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_family("4 2\n1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_family("4 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_family("4\n"), ParseError);
  CHECK_THROWS_AS(parse_family("4 2\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_family("4 2\nzz\n", FamilyFormat::bits), ParseError);
  CHECK_THROWS_AS(read_family_file("/nonexistent/file"), IoError);
  CHECK(parse_family("4 2\n").empty());
  CHECK(parse_element_set("{1,2,9}") == KSet::of({1, 2, 9}));
  CHECK(parse_element_set("1 2 9") == KSet::of({1, 2, 9}));
  CHECK_THROWS_AS(parse_format_name("xml"), UsageError);
}
