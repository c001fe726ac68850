#include "ekr/bounds.hpp"

#include <charconv>

#include "ekr/errors.hpp"
#include "ekr/measures.hpp"

namespace ekr {
namespace {

using I = std::int64_t;

void require(bool ok, const char* formula, const char* range) {
  if (!ok) throw DomainError(std::string(formula) + " requires " + range);
}

I get(const Params& p, std::string_view name) {
  auto it = p.find(name);
  if (it == p.end()) throw UsageError("missing parameter '" + std::string(name) + "'");
  return it->second;
}

BigInt nontrivial_rhs(I n, I a, I b) { return binom(n, b) - 2 * binom(n - a, b) + binom(n - 2 * a, b) + 2; }

BigInt kupavskii_small(I n, I k, I r) {
  return binom(n - 1, k - 1) - binom(n - k, k - 1) + binom(n - k - r, k - r - 1) + r;
}

BigInt kupavskii_large(I n, I k) { return binom(n - 1, k - 1) - binom(n - k, k - 1) + n - k; }

struct Entry {
  InequalityInfo info;
  // Fills lhs/rhs/relation and preconditions_met/holds.
  std::function<void(const Params&, BoundReport&)> eval;
};

bool compare(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::le: return lhs <= rhs;
    case Relation::lt: return lhs < rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::gt: return lhs > rhs;
  }
  return false;
}

void set(BoundReport& r, bool pre, Rational lhs, Relation rel, Rational rhs) {
  r.preconditions_met = pre;
  r.relation = rel;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.holds = pre && compare(r.lhs, rel, r.rhs);
}

// Size side conditions (i)-(iii) of the r-regime bounds.
bool r_regime_sizes_ok(I n, I a, I b, I r, I size_a, I size_b) {
  if (a < b) return size_a >= r;
  if (a == b) return size_a >= r && size_b >= r;
  return size_a >= r && BigInt(size_b) >= binom(n, b) - binom(n - a + b, b) + r;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    t.push_back({{"key1", {"n", "k", "i"}, "C(n-i,k) >= ((n-ik)/n) C(n,k) for n > ik", false},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k"), i = get(p, "i");
                   bool pre = n >= 1 && k >= 1 && i >= 1 && n > i * k;
                   Rational rhs = pre ? Rational(BigInt(n - i * k) * binom(n, k), BigInt(n)) : Rational(0);
                   set(r, pre, Rational(binom(n - i, k)), Relation::ge, rhs);
                 }});
    t.push_back({{"key2", {"n", "k", "p", "i"},
                  "C(n-i,k-2) - C(n-p-i,k-2) >= ((n-(i-2)k+2i-6)/(n-2)) (C(n-2,k-2) - C(n-p-2,k-2)) "
                  "for i >= 3, n > (i-2)k",
                  false},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k"), pp = get(p, "p"), i = get(p, "i");
                   bool pre = n >= 1 && k >= 1 && pp >= 1 && i >= 3 && n > (i - 2) * k && n > 2;
                   Rational lhs(binom(n - i, k - 2) - binom(n - pp - i, k - 2));
                   Rational rhs(0);
                   if (pre) {
                     rhs = Rational(BigInt(n - (i - 2) * k + 2 * i - 6), BigInt(n - 2)) *
                           Rational(binom(n - 2, k - 2) - binom(n - pp - 2, k - 2));
                   }
                   set(r, pre, lhs, Relation::ge, rhs);
                 }});
    t.push_back({{"prekey", {"a", "b"}, "ba > (b+1)(a-1) for b > a > 0", false},
                 [](const Params& p, BoundReport& r) {
                   I a = get(p, "a"), b = get(p, "b");
                   set(r, b > a && a > 0, Rational(BigInt(b) * a), Relation::gt, Rational(BigInt(b + 1) * (a - 1)));
                 }});
    t.push_back({{"binom", {"n", "a", "b"},
                  "C(n-1,a-1) + C(n-1,b-1) <= C(n,b) - C(n-a+1,b) + n-a+1 for n >= a+b, 2 <= a <= b", false},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), a = get(p, "a"), b = get(p, "b");
                   set(r, n >= a + b && 2 <= a && a <= b, Rational(binom(n - 1, a - 1) + binom(n - 1, b - 1)),
                       Relation::le, Rational(binom(n, b) - binom(n - a + 1, b) + n - a + 1));
                 }});
    t.push_back({{"g3", {"n", "k"}, "g(n,k,3) <= |G(n,k)| for n > 2k >= 6", false},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k");
                   bool pre = n > 2 * k && 2 * k >= 6;
                   if (!pre) return set(r, false, Rational(0), Relation::le, Rational(0));
                   set(r, true, Rational(g3_closed_form(n, k)), Relation::le, Rational(g_family_size(n, k)));
                 }});
    t.push_back({{"nontrivial", {"n", "a", "b", "A", "B"},
                  "|A|+|B| <= C(n,b) - 2C(n-a,b) + C(n-2a,b) + 2 for non-trivial cross-intersecting "
                  "A, B with 2 <= a <= b, n > a+b",
                  true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), a = get(p, "a"), b = get(p, "b");
                   set(r, 2 <= a && a <= b && n > a + b, Rational(get(p, "A") + get(p, "B")), Relation::le,
                       Rational(nontrivial_rhs(n, a, b)));
                 }});
    t.push_back({{"ft92", {"n", "a", "b", "A", "B"},
                  "|A|+|B| <= C(n,b) - C(n-a,b) + 1 for non-empty cross-intersecting A, B with "
                  "n >= a+b, a <= b",
                  true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), a = get(p, "a"), b = get(p, "b"), sa = get(p, "A"), sb = get(p, "B");
                   set(r, a >= 1 && a <= b && n >= a + b && sa >= 1 && sb >= 1, Rational(sa + sb), Relation::le,
                       Rational(binom(n, b) - binom(n - a, b) + 1));
                 }});
    t.push_back({{"t-intersecting", {"n", "k", "t", "A", "B"},
                  "|B| <= C(n,k-t) or |A| <= C(n,k-t-1) for cross t-intersecting A, B with |A| <= |B|", true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k"), tt = get(p, "t"), sa = get(p, "A"), sb = get(p, "B");
                   bool pre = k >= 1 && tt >= 1 && sa <= sb;
                   r.lhs2 = Rational(sa);
                   r.rhs2 = Rational(binom(n, k - tt - 1));
                   set(r, pre, Rational(sb), Relation::le, Rational(binom(n, k - tt)));
                   r.holds = pre && (r.lhs <= r.rhs || *r.lhs2 <= *r.rhs2);
                 }});
    for (const char* which : {"gft92-1", "gft92-2"}) {
      const bool small = std::string_view(which) == "gft92-1";
      t.push_back({{which, {"n", "a", "b", "r", "A", "B"},
                    small ? "|A|+|B| <= C(n,b) - C(n-a+1,b) + C(n-a-r+1,b-r) + r for 1 <= r <= b-1"
                          : "|A|+|B| <= C(n,b) - C(n-a+1,b) + n-a+1 for b <= r <= n-a+1",
                    true},
                   [small](const Params& p, BoundReport& r) {
                     I n = get(p, "n"), a = get(p, "a"), b = get(p, "b"), rr = get(p, "r");
                     I sa = get(p, "A"), sb = get(p, "B");
                     bool regime = small ? (1 <= rr && rr <= b - 1) : (b <= rr && rr <= n - a + 1);
                     bool pre = a >= 1 && b >= 1 && n >= a + b && regime && r_regime_sizes_ok(n, a, b, rr, sa, sb);
                     if (!pre) return set(r, false, Rational(sa + sb), Relation::le, Rational(0));
                     auto bounds = r_regime_bounds(n, a, b, rr);
                     set(r, true, Rational(sa + sb), Relation::le, Rational(small ? bounds.small_r : bounds.large_r));
                   }});
    }
    t.push_back({{"gft92-7", {"n", "k", "r", "F"},
                  "|F| <= C(n-1,k-1) - C(n-k,k-1) + C(n-k-r,k-r-1) + r for intersecting F with "
                  "gamma >= r, n > 2k >= 6, 1 <= r <= k-2",
                  true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k"), rr = get(p, "r");
                   set(r, n > 2 * k && 2 * k >= 6 && 1 <= rr && rr <= k - 2, Rational(get(p, "F")), Relation::le,
                       Rational(kupavskii_small(n, k, rr)));
                 }});
    t.push_back({{"gft92-8", {"n", "k", "r", "F"},
                  "|F| <= C(n-1,k-1) - C(n-k,k-1) + n-k for intersecting F with gamma >= r, "
                  "n > 2k >= 6, k-1 <= r <= n-k",
                  true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k"), rr = get(p, "r");
                   set(r, n > 2 * k && 2 * k >= 6 && k - 1 <= rr && rr <= n - k, Rational(get(p, "F")), Relation::le,
                       Rational(kupavskii_large(n, k)));
                 }});
    t.push_back({{"hahb", {"n", "a", "b", "A", "B"},
                  "|A|+|B| <= C(n,b) - 2C(n-a,b) + C(n-2a,b) + 2 for cross-intersecting A, B with A "
                  "non-trivial, B non-empty, n >= 5b, b > a >= 2",
                  true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), a = get(p, "a"), b = get(p, "b");
                   set(r, n >= 5 * b && b > a && a >= 2, Rational(get(p, "A") + get(p, "B")), Relation::le,
                       Rational(nontrivial_rhs(n, a, b)));
                 }});
    t.push_back({{"hfxy", {"n", "k", "Fxy", "Gxy"},
                  "|F(x,y)| >= C(n-3,k-3) + C(n-4,k-3) + C(n-6,k-4) implies "
                  "|G(x̄,ȳ)| <= C(n-5,k-3) + C(n-6,k-3) for cross-intersecting k-uniform F, G",
                  true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k");
                   BigInt threshold = binom(n - 3, k - 3) + binom(n - 4, k - 3) + binom(n - 6, k - 4);
                   bool pre = k >= 3 && n >= 2 * k && BigInt(get(p, "Fxy")) >= threshold;
                   set(r, pre, Rational(get(p, "Gxy")), Relation::le, Rational(binom(n - 5, k - 3) + binom(n - 6, k - 3)));
                 }});
    t.push_back({{"hfxy2", {"n", "k", "Fxy", "Fxy_bar"},
                  "|F(x,y)| >= C(n-3,k-3) + C(n-4,k-3) + C(n-5,k-3) + C(n-7,k-4) implies "
                  "|F(x̄,ȳ)| <= C(n-6,k-4) + C(n-7,k-4) for intersecting F",
                  true},
                 [](const Params& p, BoundReport& r) {
                   I n = get(p, "n"), k = get(p, "k");
                   BigInt threshold =
                       binom(n - 3, k - 3) + binom(n - 4, k - 3) + binom(n - 5, k - 3) + binom(n - 7, k - 4);
                   bool pre = k >= 4 && n >= 2 * k && BigInt(get(p, "Fxy")) >= threshold;
                   set(r, pre, Rational(get(p, "Fxy_bar")), Relation::le,
                       Rational(binom(n - 6, k - 4) + binom(n - 7, k - 4)));
                 }});
    return t;
  }();
  return table;
}

const Entry& find_entry(std::string_view name) {
  for (const Entry& e : entries())
    if (e.info.name == name) return e;
  throw UsageError("unknown inequality '" + std::string(name) + "'");
}

I sz(const Family& f) { return static_cast<I>(f.size()); }

BoundReport with_structure(std::string_view name, const Params& params, bool structure_ok, std::string note) {
  BoundReport r = inequality_check(name, params);
  if (!structure_ok) {
    r.preconditions_met = false;
    r.holds = false;
  }
  r.note = std::move(note);
  return r;
}

}  // namespace

BigInt ekr_bound(I n, I k) {
  require(k >= 1 && n >= 2 * k, "f(n,k,1)", "n >= 2k >= 2");
  return binom(n - 1, k - 1);
}

BigInt hilton_milner_size(I n, I k) {
  require(k >= 2 && n >= 2 * k, "f(n,k,2)", "n >= 2k, k >= 2");
  return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
}

BigInt g_family_size(I n, I k) {
  require(k >= 3 && n >= 2 * k, "|G(n,k)|", "n >= 2k, k >= 3");
  return binom(n - 1, k - 1) - binom(n - k, k - 1) - binom(n - k - 1, k - 1) + binom(n - 2 * k, k - 1) +
         binom(n - k - 2, k - 3) + 3;
}

BigInt k_family_size(I n, I k, I s) {
  require(k >= 1 && s >= 1 && n >= k + s - 1, "g(n,k,s)", "n >= k+s-1, s >= 1");
  BigInt total = binom(k + s - 2, k);
  for (I j = s - 1; j <= k - 1; ++j) total += binom(k + s - 2, j) * binom(n - k - s + 1, k - j - 1);
  return total;
}

BigInt g3_closed_form(I n, I k) {
  require(n > 2 * k && k >= 3, "g(n,k,3)", "n > 2k >= 6");
  return binom(n - 1, k - 1) - binom(n - k - 2, k - 1) - (k + 1) * binom(n - k - 2, k - 2) + k + 1;
}

BigInt a_r_max_degree(I n, I k, I r) {
  require(2 <= r && r <= k && n >= k + r, "Delta(A_r)", "2 <= r <= k, n >= k+r");
  return binom(n - 1, k - 1) - binom(n - r - 1, k - 1);
}

BigInt a_r_diversity(I n, I k, I r) {
  require(2 <= r && r <= k && n >= k + r, "gamma(A_r)", "2 <= r <= k, n >= k+r");
  return binom(n - r - 1, k - r);
}

BigInt a_r_size(I n, I k, I r) { return a_r_max_degree(n, k, r) + a_r_diversity(n, k, r); }

Rational g_family_leading_ratio(I n, I k) {
  BigInt denom = binom(n - 3, k - 3);
  require(denom != 0, "leading ratio", "n >= k");
  return Rational(g_family_size(n, k), denom);
}

const std::vector<std::string>& size_formula_names() {
  static const std::vector<std::string> names = {"ekr", "hm", "g", "k", "g3", "ar-delta", "ar-gamma", "ar"};
  return names;
}

BigInt size_formula(std::string_view name, const Params& p) {
  if (name == "ekr") return ekr_bound(get(p, "n"), get(p, "k"));
  if (name == "hm") return hilton_milner_size(get(p, "n"), get(p, "k"));
  if (name == "g") return g_family_size(get(p, "n"), get(p, "k"));
  if (name == "k") return k_family_size(get(p, "n"), get(p, "k"), get(p, "s"));
  if (name == "g3") return g3_closed_form(get(p, "n"), get(p, "k"));
  if (name == "ar-delta") return a_r_max_degree(get(p, "n"), get(p, "k"), get(p, "r"));
  if (name == "ar-gamma") return a_r_diversity(get(p, "n"), get(p, "k"), get(p, "r"));
  if (name == "ar") return a_r_size(get(p, "n"), get(p, "k"), get(p, "r"));
  throw UsageError("unknown size formula '" + std::string(name) + "'");
}

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
  }
  return "?";
}

const std::vector<InequalityInfo>& inequality_registry() {
  static const std::vector<InequalityInfo> infos = [] {
    std::vector<InequalityInfo> v;
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

BoundReport inequality_check(std::string_view name, const Params& params) {
  const Entry& e = find_entry(name);
  BoundReport r;
  r.name = e.info.name;
  for (const std::string& p : e.info.params) r.params[p] = get(params, p);
  e.eval(r.params, r);
  return r;
}

BoundReport inequality_check(std::string_view name, const Family& a, const Family& b, const Params& extra) {
  if (a.n() != b.n()) throw UsageError("families on different ground sets");
  const I n = a.n();
  const bool cross = is_cross_intersecting(a, b);
  auto nontrivial = [](const Family& f) { return !f.empty() && !is_star(f); };

  if (name == "nontrivial" || name == "ft92" || name == "hahb") {
    // These statements are symmetric except for the a <= b (b > a) ordering.
    const bool swap = a.k() > b.k();
    const Family& x = swap ? b : a;
    const Family& y = swap ? a : b;
    Params p{{"n", n}, {"a", x.k()}, {"b", y.k()}, {"A", sz(x)}, {"B", sz(y)}};
    if (name == "nontrivial") {
      return with_structure(name, p, cross && nontrivial(x) && nontrivial(y), "requires non-trivial cross-intersecting pair");
    }
    if (name == "ft92") {
      return with_structure(name, p, cross && !x.empty() && !y.empty(), "requires non-empty cross-intersecting pair");
    }
    return with_structure(name, p, cross && nontrivial(x) && !y.empty(),
                          "requires cross-intersecting pair, A non-trivial, B non-empty");
  }
  if (name == "t-intersecting") {
    const I t = get(extra, "t");
    if (a.k() != b.k()) throw UsageError("t-intersecting bound needs equal uniformities");
    const bool swap = a.size() > b.size();
    const Family& x = swap ? b : a;
    const Family& y = swap ? a : b;
    Params p{{"n", n}, {"k", a.k()}, {"t", t}, {"A", sz(x)}, {"B", sz(y)}};
    return with_structure(name, p, t >= 1 && is_cross_t_intersecting(a, b, static_cast<int>(t)),
                          "requires cross t-intersecting pair");
  }
  if (name == "gft92-1" || name == "gft92-2") {
    Params p{{"n", n}, {"a", a.k()}, {"b", b.k()}, {"r", get(extra, "r")}, {"A", sz(a)}, {"B", sz(b)}};
    return with_structure(name, p, cross, "requires cross-intersecting pair");
  }
  if (name == "hfxy") {
    if (a.k() != b.k()) throw UsageError("hfxy needs equal uniformities");
    const int x = static_cast<int>(get(extra, "x")), y = static_cast<int>(get(extra, "y"));
    if (x == y) throw UsageError("hfxy needs distinct x, y");
    KSet xy = KSet::of({x, y});
    Params p{{"n", n}, {"k", a.k()}, {"Fxy", sz(restrict(a, xy, xy))}, {"Gxy", sz(restrict(b, KSet(), xy))}};
    return with_structure(name, p, cross, "requires cross-intersecting pair");
  }
  throw UsageError("'" + std::string(name) + "' has no two-family form");
}

BoundReport inequality_check(std::string_view name, const Family& f, const Params& extra) {
  const I n = f.n();
  if (name == "gft92-7" || name == "gft92-8") {
    const I r = get(extra, "r");
    Params p{{"n", n}, {"k", f.k()}, {"r", r}, {"F", sz(f)}};
    return with_structure(name, p, is_intersecting(f) && static_cast<I>(diversity(f)) >= r,
                          "requires intersecting F with gamma(F) >= r");
  }
  if (name == "hfxy2") {
    const int x = static_cast<int>(get(extra, "x")), y = static_cast<int>(get(extra, "y"));
    if (x == y) throw UsageError("hfxy2 needs distinct x, y");
    KSet xy = KSet::of({x, y});
    Params p{{"n", n}, {"k", f.k()}, {"Fxy", sz(restrict(f, xy, xy))}, {"Fxy_bar", sz(restrict(f, KSet(), xy))}};
    return with_structure(name, p, is_intersecting(f), "requires intersecting F");
  }
  return inequality_check(name, f, f, extra);
}

RRegimeBounds r_regime_bounds(I n, I a, I b, I r) {
  require(a >= 1 && b >= 1 && n >= a + b && 1 <= r && r <= n - a + 1, "r-regime bound",
          "n >= a+b, 1 <= r <= n-a+1");
  BigInt base = binom(n, b) - binom(n - a + 1, b);
  return {base + binom(n - a - r + 1, b - r) + r, base + n - a + 1};
}

BigInt r_regime_applicable(I n, I a, I b, I r) {
  auto bounds = r_regime_bounds(n, a, b, r);
  return r <= b - 1 ? bounds.small_r : bounds.large_r;
}

std::vector<ParamRange> parse_scan(std::string_view spec) {
  std::vector<ParamRange> out;
  auto parse_num = [&](std::string_view s) {
    I v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad number '" + std::string(s) + "' in scan");
    return v;
  };
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(start, end - start);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw UsageError("scan item '" + std::string(item) + "' is not name=lo..hi");
    ParamRange r;
    r.name = std::string(item.substr(0, eq));
    std::string_view range = item.substr(eq + 1);
    std::size_t dots = range.find("..");
    if (dots == std::string_view::npos) {
      r.lo = r.hi = parse_num(range);
    } else {
      r.lo = parse_num(range.substr(0, dots));
      r.hi = parse_num(range.substr(dots + 2));
    }
    if (r.lo > r.hi) throw UsageError("empty range for '" + r.name + "'");
    for (const auto& prev : out)
      if (prev.name == r.name) throw UsageError("parameter '" + r.name + "' given twice");
    out.push_back(r);
    start = end + 1;
  }
  return out;
}

ScanSummary scan_inequality(std::string_view name, const std::vector<ParamRange>& box,
                            const std::function<void(const BoundReport&)>& on_report) {
  const Entry& e = find_entry(name);
  if (box.size() != e.info.params.size()) {
    throw UsageError("scan for '" + std::string(name) + "' must give exactly its parameters");
  }
  for (const std::string& p : e.info.params) {
    bool found = false;
    for (const auto& r : box) found = found || r.name == p;
    if (!found) throw UsageError("scan for '" + std::string(name) + "' is missing parameter '" + p + "'");
  }
  ScanSummary summary;
  Params point;
  for (const auto& r : box) point[r.name] = r.lo;
  while (true) {
    BoundReport rep;
    rep.name = e.info.name;
    rep.params = point;
    e.eval(point, rep);
    ++summary.points;
    if (rep.preconditions_met) {
      ++summary.applicable;
      if (!rep.holds) ++summary.violations;
    }
    if (on_report) on_report(rep);
    // Odometer over the box, last parameter fastest.
    std::size_t i = box.size();
    while (i > 0) {
      --i;
      auto& v = point[box[i].name];
      if (v < box[i].hi) {
        ++v;
        break;
      }
      v = box[i].lo;
      if (i == 0) return summary;
    }
    if (box.empty()) return summary;
  }
}

}  // namespace ekr
