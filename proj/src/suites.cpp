#include "ekr/suites.hpp"

#include <algorithm>
#include <random>

#include "ekr/bounds.hpp"
#include "ekr/constructions.hpp"
#include "ekr/errors.hpp"
#include "ekr/measures.hpp"
#include "ekr/naive.hpp"
#include "ekr/search.hpp"
#include "ekr/shifting.hpp"

namespace ekr {

void SuiteCheck::record(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string describe_family(const Family& f) {
  std::string s = "n=" + std::to_string(f.n()) + " k=" + std::to_string(f.k()) + " {";
  bool first = true;
  for (KSet x : f) {
    if (!first) s += ' ';
    s += x.to_string();
    first = false;
  }
  return s + "}";
}

/// Greedy random intersecting family of up to `target` members.
Family random_intersecting(Rng& rng, const GroundSpec& g, std::size_t target) {
  auto pool = all_ksets(g.n(), g.k());
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<KSet> chosen;
  for (KSet s : pool) {
    if (chosen.size() >= target) break;
    if (std::all_of(chosen.begin(), chosen.end(), [&](KSet c) { return c.intersects(s); })) chosen.push_back(s);
  }
  return Family(g, std::move(chosen));
}

/// Random sample of the sets in `pool` that meet every member of `other`.
std::vector<KSet> random_compatible(Rng& rng, const std::vector<KSet>& pool, const Family& other, double keep) {
  std::bernoulli_distribution coin(keep);
  std::vector<KSet> out;
  for (KSet s : pool) {
    bool ok = std::all_of(other.begin(), other.end(), [&](KSet o) { return o.intersects(s); });
    if (ok && coin(rng)) out.push_back(s);
  }
  return out;
}

std::pair<Family, Family> random_cross_pair(Rng& rng, int n, int a, int b) {
  const GroundSpec ga(n, a), gb(n, b);
  auto pool_a = all_ksets(n, a);
  auto pool_b = all_ksets(n, b);
  std::shuffle(pool_a.begin(), pool_a.end(), rng);
  const int seeds = uniform(rng, 1, 4);
  Family f(ga, std::vector<KSet>(pool_a.begin(), pool_a.begin() + std::min<std::size_t>(seeds, pool_a.size())));
  std::uniform_real_distribution<double> keep(0.2, 1.0);
  Family g(gb, random_compatible(rng, pool_b, f, keep(rng)));
  std::vector<KSet> more = random_compatible(rng, pool_a, g, keep(rng));
  more.insert(more.end(), f.begin(), f.end());
  return {Family(ga, std::move(more)), std::move(g)};
}

/// Plain simultaneous shifting until both families are initial.
std::pair<Family, Family> shift_to_initial(Family f, Family g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= f.n(); ++i)
      for (int j = i + 1; j <= f.n(); ++j) {
        Family f2 = shift(f, i, j), g2 = shift(g, i, j);
        if (f2 != f || g2 != g) changed = true;
        f = std::move(f2);
        g = std::move(g2);
      }
  }
  return {std::move(f), std::move(g)};
}

bool shadow_contained(const Family& f) {
  if (f.k() < 1) return true;
  const Family lower = restrict_exclude(f, 1);
  const Family upper = restrict_include(f, 1);
  if (lower.empty()) return true;
  const Family sh = shadow(lower);
  return std::all_of(sh.begin(), sh.end(), [&](KSet s) { return upper.contains(s); });
}

std::vector<std::pair<int, int>> small_grounds(int max_sets) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= max_sets; ++n)
    for (int k = 1; k <= n; ++k)
      if (binom(n, k) <= max_sets) out.emplace_back(n, k);
  return out;
}

std::string ground_name(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

SuiteCheck scan_check(const std::string& name, const std::string& box) {
  SuiteCheck c{"scan " + name + " " + box};
  ScanSummary s = scan_inequality(name, parse_scan(box), [&](const BoundReport& r) {
    if (!r.preconditions_met) return;
    std::string at;
    for (const auto& [key, value] : r.params) at += key + "=" + std::to_string(value) + " ";
    c.record(r.holds, name + " fails at " + at);
  });
  (void)s;
  return c;
}

std::vector<SuiteCheck> construction_checks() {
  std::vector<SuiteCheck> out;
  SuiteCheck g_size{"|G(n,k)| equals the closed form"}, g_tau{"tau(G(n,k)) = 3"}, g_int{"G(n,k) intersecting"};
  for (int k = 3; k <= 5; ++k)
    for (int n = 2 * k; n <= 18; ++n) {
      Family g = g_family(GroundSpec(n, k));
      const std::string at = ground_name(n, k);
      g_size.record(BigInt(g.size()) == g_family_size(n, k), at);
      g_tau.record(covering_number(g).size == 3, at);
      g_int.record(is_intersecting(g), at);
    }
  SuiteCheck a23{"|A_2(n,k)| = |A_3(n,k)|"};
  for (int k = 3; k <= 6; ++k)
    for (int n = k + 3; n <= 18; ++n)
      a23.record(a_r_family(GroundSpec(n, k), 2).size() == a_r_family(GroundSpec(n, k), 3).size(), ground_name(n, k));
  SuiteCheck ar{"gamma and Delta of A_r(n,k)"};
  for (int k = 2; k <= 5; ++k)
    for (int r = 2; r <= k; ++r)
      for (int n = k + r; n <= 16; ++n) {
        Family f = a_r_family(GroundSpec(n, k), r);
        ar.record(BigInt(diversity(f)) == a_r_diversity(n, k, r) && BigInt(max_degree(f)) == a_r_max_degree(n, k, r),
                  ground_name(n, k) + " r=" + std::to_string(r));
      }
  SuiteCheck hm{"H(n,k): size, tau = 2, gamma = 1"};
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k + 1; n <= 14; ++n) {
      Family f = hilton_milner(GroundSpec(n, k));
      hm.record(BigInt(f.size()) == hilton_milner_size(n, k) && covering_number(f).size == 2 && diversity(f) == 1,
                ground_name(n, k));
    }
  SuiteCheck kf{"K(n,k,s): size, initial, omega >= k+s-1 for s <= k"};
  for (int k = 2; k <= 4; ++k)
    for (int s = 1; s <= 3; ++s)
      for (int n = k + s - 1; n <= 11; ++n) {
        Family f = k_family(GroundSpec(n, k), s);
        bool ok = BigInt(f.size()) == k_family_size(n, k, s) && is_initial(f);
        // for s > k the part through 1 is empty and only C([2,k+s-1],k) remains
        if (ok && s <= k) ok = clique_number(f).size >= k + s - 1;
        kf.record(ok, ground_name(n, k) + " s=" + std::to_string(s));
      }
  SuiteCheck fano{"Fano family intersecting"};
  for (int k = 3; k <= 5; ++k)
    for (int n = 10; n <= 13; ++n) fano.record(is_intersecting(fano_family(GroundSpec(n, k))), ground_name(n, k));
  out.insert(out.end(), {g_size, g_tau, g_int, a23, ar, hm, kf, fano});
  return out;
}

}  // namespace

std::vector<SuiteCheck> check_initial_facts(int n_max, int k) {
  SuiteCheck fact1{"initial F: gamma <= C(n-3,k-2) when n > 3k-2"};
  SuiteCheck fact2{"initial F: F(1-bar) is 2-intersecting"};
  SuiteCheck sh{"initial F: shadow of F(1-bar) inside F(1)"};
  SuiteCheck agree{"initial F: both initiality criteria agree"};
  for (int n = std::max(k, 1); n <= n_max; ++n) {
    const GroundSpec g(n, k);
    for_each_initial_intersecting(g, [&](const Family& f) {
      const std::string what = describe_family(f);
      if (n > 3 * k - 2 && k >= 2) fact1.record(BigInt(diversity(f)) <= binom(n - 3, k - 2), what);
      const Family lower = restrict_exclude(f, 1);
      fact2.record(is_cross_t_intersecting(lower, lower, 2), what);
      sh.record(shadow_contained(f), what);
      agree.record(is_initial_by_shifts(f) && is_initial_by_order(f), what);
    });
  }
  return {fact1, fact2, sh, agree};
}

SuiteCheck check_initial_pairs(std::uint64_t seed, int count) {
  Rng rng(seed);
  SuiteCheck c{"initial cross-intersecting F, G: F(1-bar), G(1-bar) cross 2-intersecting"};
  for (int t = 0; t < count; ++t) {
    const int n = uniform(rng, 4, 10);
    const int a = uniform(rng, 2, std::min(4, n - 1));
    const int b = uniform(rng, 2, std::min(4, n - 1));
    auto [f0, g0] = random_cross_pair(rng, n, a, b);
    auto [f, g] = shift_to_initial(f0, g0);
    const bool ok = is_initial(f) && is_initial(g) && is_cross_intersecting(f, g) &&
                    is_cross_t_intersecting(restrict_exclude(f, 1), restrict_exclude(g, 1), 2);
    c.record(ok, describe_family(f) + " / " + describe_family(g));
  }
  return c;
}

SuiteCheck check_hilton_lemma(std::uint64_t seed, int count) {
  Rng rng(seed);
  SuiteCheck c{"lex families of cross-intersecting sizes are cross-intersecting"};
  for (int t = 0; t < count; ++t) {
    const int n = uniform(rng, 2, 12);
    const int a = uniform(rng, 1, std::min(4, n));
    const int b = uniform(rng, 1, std::min(4, n));
    auto [f, g] = random_cross_pair(rng, n, a, b);
    const Family lf = lex_family(f.ground(), f.size());
    const Family lg = lex_family(g.ground(), g.size());
    c.record(is_cross_intersecting(f, g) && is_cross_intersecting(lf, lg),
             describe_family(f) + " / " + describe_family(g));
  }
  return c;
}

std::vector<SuiteCheck> check_shifting_engine(std::uint64_t seed, int count) {
  Rng rng(seed);
  SuiteCheck bound{"steps <= w(F)"}, mono{"weight strictly decreases at every step"};
  SuiteCheck pairs{"every pair stable or blocked (naive re-check)"}, sub{"H is a subgraph of the 2-cover graph"};
  SuiteCheck kept{"output intersecting with tau >= 2"};
  const PreservedProperty p = MinCover{2};
  int made = 0;
  while (made < count) {
    const int n = uniform(rng, 6, 12);
    const GroundSpec g(n, 3);
    Family f = random_intersecting(rng, g, static_cast<std::size_t>(uniform(rng, 3, 25)));
    if (is_star(f)) continue;
    ++made;
    const std::string what = describe_family(f);
    AdExtremisResult r = shift_ad_extremis(f, p);
    bound.record(r.trace.steps.size() <= weight(f), what);
    bool dec = true;
    std::uint64_t w = weight(f);
    for (const ShiftStep& s : r.trace.steps) {
      dec = dec && s.weight_before == w && s.weight_after < s.weight_before;
      w = s.weight_after;
    }
    mono.record(dec && w == weight(r.f), what);

    const naive::SetFamily out = naive::to_sets(r.f);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = i + 1; j <= n && ok; ++j) {
        naive::SetFamily shifted = naive::shift(out, i, j);
        if (shifted == out) {
          ok = !r.h.contains(i, j);
          continue;
        }
        auto c = naive::cover(shifted, n);
        ok = r.h.contains(i, j) && c && c->first < 2;
      }
    pairs.record(ok, what);

    PairGraph hat(n);
    for (auto [i, j] : naive::two_covers(out, n)) hat.add(i, j);
    sub.record(r.h.is_subgraph_of(hat), what);
    auto c = naive::cover(out, n);
    kept.record(naive::intersecting(out) && c && c->first >= 2 && r.f.size() == f.size(), what);
  }
  return {bound, mono, pairs, sub, kept};
}

SuiteCheck check_search_oracle(int max_sets) {
  SuiteCheck c{"branch-and-bound f(n,k,s) equals naive enumeration"};
  for (auto [n, k] : small_grounds(max_sets)) {
    for (int s = 1; s <= std::min(k, 3); ++s) {
      SearchResult fast = max_intersecting(GroundSpec(n, k), s);
      naive::Optimum slow = naive::max_intersecting(n, k, s);
      const bool same = fast.optimum == slow.value && naive::to_sets(fast.witness) == slow.witness;
      c.record(same, ground_name(n, k) + " s=" + std::to_string(s) + ": " + std::to_string(fast.optimum) + " vs " +
                         std::to_string(slow.value));
    }
  }
  return c;
}

std::vector<SuiteCheck> check_other_oracles(int max_sets) {
  SuiteCheck div{"max diversity equals naive"}, init{"initial intersecting count equals naive"};
  SuiteCheck rho_scan{"degree-ratio scan equals naive"};
  for (auto [n, k] : small_grounds(max_sets)) {
    const GroundSpec g(n, k);
    SearchResult d = max_diversity(g);
    naive::Optimum nd = naive::max_diversity(n, k);
    div.record(d.optimum == nd.value && naive::to_sets(d.witness) == nd.witness, ground_name(n, k));
    init.record(for_each_initial_intersecting(g, nullptr) == naive::count_initial_intersecting(n, k), ground_name(n, k));
    ConjectureReport r = conjecture_scan(g);
    auto nr = naive::min_rho(n, k, static_cast<std::uint64_t>(binom(n - 3, k - 3)));
    bool same = r.min_rho.has_value() == nr.has_value();
    if (same && nr) same = r.min_rho->value == make_rational(nr->first, nr->second);
    rho_scan.record(same, ground_name(n, k));
  }
  return {div, init, rho_scan};
}

std::vector<SuiteCheck> check_measure_oracles(std::uint64_t seed, int count) {
  Rng rng(seed);
  SuiteCheck tau{"tau and its witness equal naive"}, omega{"omega and its witness equal naive"};
  SuiteCheck hat{"2-cover graph equals naive"}, sh{"S_ij equals naive"};
  for (int t = 0; t < count; ++t) {
    const int n = uniform(rng, 2, 8);
    const int k = uniform(rng, 1, std::min(4, n));
    auto pool = all_ksets(n, k);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(pool.size()))));
    const Family f(GroundSpec(n, k), pool);
    const naive::SetFamily nf = naive::to_sets(f);
    const std::string what = describe_family(f);

    Cover cv = covering_number(f);
    auto ncv = naive::cover(nf, n);
    tau.record(ncv && cv.size == ncv->first && cv.witness.elements() == ncv->second, what);
    Clique cl = clique_number(f);
    auto ncl = naive::clique(nf, n, k);
    omega.record(cl.size == ncl.first && cl.witness.elements() == ncl.second, what);
    hat.record(two_cover_graph(f).edges() == naive::two_covers(nf, n), what);
    bool same = true;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) same = same && naive::to_sets(shift(f, i, j)) == naive::shift(nf, i, j);
    sh.record(same, what);
  }
  return {tau, omega, hat, sh};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"facts", "hilton", "shifting", "constructions", "bounds-scan",
                                                 "oracle"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  SuiteReport r{std::string(name), seed, {}};
  auto add = [&](std::vector<SuiteCheck> v) { r.checks.insert(r.checks.end(), v.begin(), v.end()); };
  if (name == "facts") {
    add(check_initial_facts(10, 3));
    add(check_initial_facts(9, 2));
    r.checks.push_back(check_initial_pairs(seed, 300));
  } else if (name == "hilton") {
    r.checks.push_back(check_hilton_lemma(seed, 1000));
  } else if (name == "shifting") {
    add(check_shifting_engine(seed, 200));
  } else if (name == "constructions") {
    add(construction_checks());
  } else if (name == "bounds-scan") {
    r.checks.push_back(scan_check("key1", "n=1..200,k=1..20,i=1..6"));
    r.checks.push_back(scan_check("key2", "n=3..200,k=2..20,p=1..200,i=3..6"));
    r.checks.push_back(scan_check("prekey", "a=1..200,b=1..200"));
    r.checks.push_back(scan_check("binom", "n=4..120,a=2..60,b=2..60"));
    r.checks.push_back(scan_check("g3", "n=7..120,k=3..12"));
  } else if (name == "oracle") {
    r.checks.push_back(check_search_oracle(20));
    add(check_other_oracles(20));
    add(check_measure_oracles(seed, 300));
  } else {
    throw UsageError("unknown suite '" + std::string(name) + "'");
  }
  return r;
}

}  // namespace ekr
