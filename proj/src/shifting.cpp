#include "ekr/shifting.hpp"

#include <algorithm>
#include <charconv>

#include "ekr/errors.hpp"
#include "ekr/measures.hpp"

namespace ekr {
namespace {

std::int64_t parse_int64(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

bool stable(const Family& f, int i, int j) {
  const SetWord bi = bit(i - 1), bj = bit(j - 1);
  for (KSet s : f) {
    if ((s.bits() & bj) && !(s.bits() & bi) && !f.contains(KSet((s.bits() & ~bj) | bi))) return false;
  }
  return true;
}

}  // namespace

Family shift(const Family& family, int i, int j) {
  if (i < 1 || j > family.n() || i >= j) throw UsageError("shift needs 1 <= i < j <= n");
  const SetWord bi = bit(i - 1), bj = bit(j - 1);
  std::vector<KSet> out;
  out.reserve(family.size());
  bool changed = false;
  for (KSet s : family) {
    if ((s.bits() & bj) && !(s.bits() & bi)) {
      KSet image((s.bits() & ~bj) | bi);
      if (!family.contains(image)) {
        out.push_back(image);
        changed = true;
        continue;
      }
    }
    out.push_back(s);
  }
  if (!changed) return family;
  return Family(family.ground(), std::move(out));
}

std::uint64_t weight(const Family& family) {
  std::uint64_t w = 0;
  for (KSet s : family)
    for (SetWord b = s.bits(); b != 0; b &= b - 1) w += static_cast<std::uint64_t>(lowest_bit(b) + 1);
  return w;
}

bool is_initial_by_shifts(const Family& family) {
  for (int j = 2; j <= family.n(); ++j)
    for (int i = 1; i < j; ++i)
      if (!stable(family, i, j)) return false;
  return true;
}

bool is_initial_by_order(const Family& family) {
  for (KSet s : family) {
    for (int e : s.elements()) {
      if (e > 1 && !s.contains(e - 1) && !family.contains(s.without(e).with(e - 1))) return false;
    }
  }
  return true;
}

bool satisfies(const PreservedProperty& property, const Family& f, const Family& g) {
  struct Visitor {
    const Family& f;
    const Family& g;
    bool operator()(const MinCover& p) const { return p.s <= 0 || !find_transversal(f, p.s - 1).has_value(); }
    bool operator()(const MaxRho& p) const { return !f.empty() && rho(f).value <= p.c; }
    bool operator()(const NonTrivialBoth&) const {
      return !f.empty() && !g.empty() && !is_star(f) && !is_star(g);
    }
    bool operator()(const CustomProperty& p) const { return p.predicate(f, g); }
  };
  return std::visit(Visitor{f, g}, property);
}

std::string describe(const PreservedProperty& property) {
  struct Visitor {
    std::string operator()(const MinCover& p) const { return "mincover=" + std::to_string(p.s); }
    std::string operator()(const MaxRho& p) const { return "maxrho=" + to_string(p.c); }
    std::string operator()(const NonTrivialBoth&) const { return "nontrivial"; }
    std::string operator()(const CustomProperty& p) const { return p.name; }
  };
  return std::visit(Visitor{}, property);
}

PreservedProperty parse_property(std::string_view text) {
  if (text == "nontrivial") return NonTrivialBoth{};
  auto eq = text.find('=');
  if (eq != std::string_view::npos) {
    std::string_view key = text.substr(0, eq), value = text.substr(eq + 1);
    if (key == "mincover") {
      std::int64_t s = parse_int64(value, "cover size");
      if (s < 1 || s > kMaxElements) throw UsageError("mincover needs 1 <= s <= " + std::to_string(kMaxElements));
      return MinCover{static_cast<int>(s)};
    }
    if (key == "maxrho") {
      auto slash = value.find('/');
      std::int64_t num = parse_int64(value.substr(0, slash), "ratio");
      std::int64_t den = slash == std::string_view::npos ? 1 : parse_int64(value.substr(slash + 1), "ratio");
      if (den == 0) throw UsageError("maxrho denominator is zero");
      return MaxRho{make_rational(num, den)};
    }
  }
  throw UsageError("unknown property '" + std::string(text) + "' (mincover=s, maxrho=p/q, nontrivial)");
}

PairGraph::PairGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > kMaxElements) throw UsageError("pair graph needs 1 <= n <= " + std::to_string(kMaxElements));
}

void PairGraph::add(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) throw UsageError("invalid edge");
  adj_[u - 1] |= bit(v - 1);
  adj_[v - 1] |= bit(u - 1);
}

bool PairGraph::contains(int u, int v) const noexcept {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return (adj_[u - 1] & bit(v - 1)) != 0;
}

std::size_t PairGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (SetWord a : adj_) twice += static_cast<std::size_t>(popcount(a));
  return twice / 2;
}

std::vector<std::pair<int, int>> PairGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (contains(u, v)) out.emplace_back(u, v);
  return out;
}

bool PairGraph::is_subgraph_of(const PairGraph& other) const noexcept {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] & ~other.adj_[v]) return false;
  return true;
}

bool PairGraph::is_triangle_free() const noexcept {
  for (int u = 0; u < n_; ++u)
    for (SetWord w = adj_[u]; w != 0; w &= w - 1) {
      int v = lowest_bit(w);
      if (v > u && (adj_[u] & adj_[v]) != 0) return false;
    }
  return true;
}

PairGraph two_cover_graph(const Family& family) {
  PairGraph h(family.n());
  for (int i = 1; i <= family.n(); ++i) {
    for (int j = i + 1; j <= family.n(); ++j) {
      const SetWord pair = bit(i - 1) | bit(j - 1);
      bool covers = true;
      for (KSet s : family) {
        if ((s.bits() & pair) == 0) {
          covers = false;
          break;
        }
      }
      if (covers) h.add(i, j);
    }
  }
  return h;
}

std::optional<PartialShiftViolation> partial_shift_violation(const PairGraph& h) {
  const int n = h.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!h.contains(i, j)) continue;
      for (int x = 1; x < j; ++x) {
        if (x == i || h.contains(x, j)) continue;
        if (!h.contains(i, x)) return PartialShiftViolation{i, j, x};
      }
    }
  return std::nullopt;
}

std::optional<Bipartition> bipartite_decomposition(const PairGraph& h) {
  const int n = h.n();
  SetWord covered = 0;
  for (int v = 1; v <= n; ++v)
    if (!h.neighbours(v).empty()) covered |= bit(v - 1);
  if (covered == 0) return std::nullopt;
  const int m = popcount(covered);
  if (covered != low_mask(m)) return std::nullopt;
  const SetWord y = h.neighbours(1).bits();
  const SetWord x = covered & ~y;
  for (int v = 1; v <= m; ++v) {
    const SetWord nb = h.neighbours(v).bits();
    const bool in_x = (x & bit(v - 1)) != 0;
    if (nb != (in_x ? y : x)) return std::nullopt;
  }
  return Bipartition{ElementSet(x), ElementSet(y)};
}

std::string_view applied_to_name(AppliedTo a) {
  switch (a) {
    case AppliedTo::f: return "F";
    case AppliedTo::g: return "G";
    case AppliedTo::both: return "both";
  }
  return "?";
}

namespace {

AdExtremisResult run_engine(const Family& f0, const Family& g0, bool pair, const PreservedProperty& property) {
  if (f0.n() != g0.n()) throw DomainError("shifting needs families on the same ground set");
  if (!satisfies(property, f0, pair ? g0 : f0)) {
    throw DomainError("input does not satisfy the preserved property " + describe(property));
  }
  Family f = f0;
  Family g = pair ? g0 : f0;
  ShiftTrace trace;
  const int n = f.n();
  auto total = [&] { return pair ? weight(f) + weight(g) : weight(f); };
  bool applied = true;
  while (applied) {
    applied = false;
    ++trace.passes;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Family f2 = shift(f, i, j);
        Family g2 = pair ? shift(g, i, j) : f2;
        const bool fchg = f2 != f;
        const bool gchg = pair && g2 != g;
        if (!fchg && !gchg) continue;
        if (!satisfies(property, f2, g2)) continue;
        ShiftStep step{i, j, !pair || !gchg ? AppliedTo::f : (fchg ? AppliedTo::both : AppliedTo::g), total(), 0};
        f = std::move(f2);
        g = std::move(g2);
        step.weight_after = total();
        trace.steps.push_back(step);
        applied = true;
      }
    }
  }
  PairGraph h(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!stable(f, i, j) || (pair && !stable(g, i, j))) h.add(i, j);
  return AdExtremisResult{std::move(f), std::move(g), std::move(h), std::move(trace), false};
}

PairGraph resistant(const Family& f, const Family& g, bool pair, const PreservedProperty& property) {
  if (f.n() != g.n()) throw UsageError("shift-resistant graph needs families on the same ground set");
  PairGraph h(f.n());
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      Family f2 = shift(f, i, j);
      Family g2 = pair ? shift(g, i, j) : f2;
      if (f2 == f && (!pair || g2 == g)) continue;
      if (satisfies(property, f2, g2)) {
        throw UsageError("not shifted ad extremis: S_" + std::to_string(i) + "," + std::to_string(j) +
                         " keeps the property");
      }
      h.add(i, j);
    }
  }
  return h;
}

}  // namespace

AdExtremisResult shift_ad_extremis(const Family& f, const Family& g, const PreservedProperty& property) {
  return run_engine(f, g, true, property);
}

AdExtremisResult shift_ad_extremis(const Family& f, const PreservedProperty& property) {
  return run_engine(f, f, false, property);
}

PairGraph shift_resistant_graph(const Family& f, const Family& g, const PreservedProperty& property) {
  return resistant(f, g, true, property);
}

PairGraph shift_resistant_graph(const Family& f, const PreservedProperty& property) {
  return resistant(f, f, false, property);
}

SaturatedPair saturate_pair(const Family& f, const Family& g) {
  if (f.n() != g.n()) throw DomainError("saturation needs families on the same ground set");
  if (f.empty() && g.empty()) throw DomainError("saturation of two empty families is ill-posed");
  if (!is_cross_intersecting(f, g)) throw DomainError("saturation needs a cross-intersecting pair");
  std::vector<KSet> fs(f.begin(), f.end());
  std::vector<KSet> gs(g.begin(), g.end());
  const auto f_cands = all_ksets(f.n(), f.k());
  const auto g_cands = all_ksets(g.n(), g.k());

  auto fill = [](std::vector<KSet>& mine, const std::vector<KSet>& other, const std::vector<KSet>& cands) {
    bool added = false;
    for (KSet c : cands) {
      if (std::find(mine.begin(), mine.end(), c) != mine.end()) continue;
      bool ok = true;
      for (KSet o : other) {
        if (!c.intersects(o)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        mine.push_back(c);
        added = true;
      }
    }
    return added;
  };
  while (true) {
    bool added = fill(fs, gs, f_cands);
    added = fill(gs, fs, g_cands) || added;
    if (!added) break;
  }
  return SaturatedPair{Family(f.ground(), std::move(fs)), Family(g.ground(), std::move(gs))};
}

bool is_full(const Family& family, ElementSet d) {
  if (d.size() > family.k()) throw UsageError("fullness needs |D| <= k");
  if ((d.bits() & ~family.ground().universe()) != 0) throw UsageError("D must lie in [n]");
  return BigInt(count_containing(family, d)) == binom(family.n() - d.size(), family.k() - d.size());
}

}  // namespace ekr
