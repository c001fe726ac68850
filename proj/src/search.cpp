#include "ekr/search.hpp"

#include <algorithm>
#include <bit>

#include "ekr/errors.hpp"

namespace ekr {
namespace {

/// Fixed-size bitset over candidate indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), w_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) noexcept { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool none() const noexcept {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  /// Index of the lowest set bit at or above `from`, or size() when none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t word = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word) return std::min(size_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      if (++wi == w_.size()) return size_;
      word = w_[wi];
    }
  }
  bool intersects(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  std::size_t and_count(const Bits& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }
  bool is_subset_of(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> w_;
};

/// The k-sets of a ground in lex order together with the "meets" graph and
/// per-element membership masks.
struct Universe {
  GroundSpec ground;
  std::vector<KSet> sets;
  std::vector<Bits> adj;       // adj[v]: candidates meeting sets[v] (v excluded)
  std::vector<Bits> contains;  // contains[i]: candidates containing element i+1

  Universe(const GroundSpec& g, std::uint64_t max_candidates, bool require_intersecting) : ground(g) {
    if (binom(g.n(), g.k()) > BigInt(max_candidates)) {
      throw BudgetExceeded("refused: C(" + std::to_string(g.n()) + "," + std::to_string(g.k()) + ") exceeds " +
                           std::to_string(max_candidates) + " candidates");
    }
    sets = all_ksets(g.n(), g.k());
    const std::size_t m = sets.size();
    adj.assign(m, Bits(m));
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = u + 1; v < m; ++v)
        if (!require_intersecting || sets[u].intersects(sets[v])) {
          adj[u].set(v);
          adj[v].set(u);
        }
    contains.assign(static_cast<std::size_t>(g.n()), Bits(m));
    for (std::size_t v = 0; v < m; ++v)
      for (int e : sets[v].elements()) contains[static_cast<std::size_t>(e - 1)].set(v);
  }

  std::size_t size() const noexcept { return sets.size(); }
  Bits all() const {
    Bits b(size());
    for (std::size_t v = 0; v < size(); ++v) b.set(v);
    return b;
  }
  Family family(const std::vector<std::size_t>& chosen) const {
    std::vector<KSet> out;
    for (auto v : chosen) out.push_back(sets[v]);
    return Family(ground, std::move(out));
  }
  std::uint64_t max_degree(const Bits& members) const {
    std::size_t best = 0;
    for (const Bits& c : contains) best = std::max(best, members.and_count(c));
    return best;
  }
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++nodes_ > limit_) throw BudgetExceeded("search exceeded " + std::to_string(limit_) + " nodes");
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

/// Greedy sequential colouring of `p` in index order; returns the number of
/// colour classes, an upper bound on any clique inside `p`.
std::size_t colour_bound(const Universe& u, Bits p) {
  std::size_t colours = 0;
  while (!p.none()) {
    ++colours;
    Bits q = p;
    for (std::size_t v = q.next(0); v < q.size(); v = q.next(v + 1)) {
      p.reset(v);
      q = q.minus(u.adj[v]);
    }
  }
  return colours;
}

/// Colour classes in index order with each vertex's colour number, for the
/// usual max-clique ordering (vertices expanded from the highest colour).
void colour_sort(const Universe& u, Bits p, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) {
  order.clear();
  colour.clear();
  std::size_t c = 0;
  while (!p.none()) {
    ++c;
    Bits q = p;
    for (std::size_t v = q.next(0); v < q.size(); v = q.next(v + 1)) {
      p.reset(v);
      q = q.minus(u.adj[v]);
      order.push_back(v);
      colour.push_back(c);
    }
  }
}

/// Tracks the (s-1)-sets that cover the chosen members: each one must be
/// avoided by some remaining candidate, or τ >= s is out of reach.
class CoverGuard {
 public:
  CoverGuard(const Universe& u, int s) {
    if (s < 2) return;
    const int t = s - 1;
    if (t > u.ground.n()) return;
    for (KSet cover : all_ksets(u.ground.n(), t)) {
      Bits avoid(u.size());
      for (std::size_t v = 0; v < u.size(); ++v)
        if (!u.sets[v].intersects(cover)) avoid.set(v);
      avoiders_.push_back(std::move(avoid));
    }
  }

  /// False when some (s-1)-cover of the chosen members is avoided by no
  /// candidate.
  bool feasible(const Bits& chosen, const Bits& candidates) const {
    for (const Bits& avoid : avoiders_) {
      if (chosen.intersects(avoid)) continue;
      if (!candidates.intersects(avoid)) return false;
    }
    return true;
  }
  /// τ(chosen) >= s.
  bool satisfied(const Bits& chosen) const {
    for (const Bits& avoid : avoiders_)
      if (!chosen.intersects(avoid)) return false;
    return true;
  }

 private:
  std::vector<Bits> avoiders_;
};

class CliqueSearch {
 public:
  CliqueSearch(const Universe& u, int min_tau, Budget& budget) : u_(u), guard_(u, min_tau), budget_(budget) {}

  /// Size of the largest clique satisfying the cover condition.
  std::size_t maximum(bool symmetry) {
    Bits chosen(u_.size());
    std::vector<std::size_t> q;
    Bits p = u_.all();
    best_ = 0;
    if (symmetry && u_.size() > 0) {
      q.push_back(0);
      chosen.set(0);
      p = p & u_.adj[0];
      // [k] alone may already qualify.
      if (guard_.satisfied(chosen)) best_ = 1;
      if (guard_.feasible(chosen, p)) expand(q, chosen, p);
    } else {
      expand(q, chosen, p);
    }
    return best_;
  }

  /// Lex-first clique of exactly `target` members satisfying the condition.
  std::vector<std::size_t> lex_first(std::size_t target) {
    std::vector<std::size_t> q;
    Bits chosen(u_.size());
    found_.clear();
    if (target == 0) return {};
    descend(q, chosen, u_.all(), target);
    return found_;
  }

 private:
  void expand(std::vector<std::size_t>& q, Bits& chosen, Bits p) {
    budget_.tick();
    std::vector<std::size_t> order, colour;
    colour_sort(u_, p, order, colour);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (q.size() + colour[idx] <= best_) return;
      const std::size_t v = order[idx];
      q.push_back(v);
      chosen.set(v);
      Bits np = p & u_.adj[v];
      if (q.size() > best_ && guard_.satisfied(chosen)) best_ = q.size();
      if (!np.none() && guard_.feasible(chosen, np)) expand(q, chosen, np);
      chosen.reset(v);
      q.pop_back();
      p.reset(v);
    }
  }

  bool descend(std::vector<std::size_t>& q, Bits& chosen, Bits p, std::size_t target) {
    budget_.tick();
    for (std::size_t v = p.next(0); v < p.size(); v = p.next(v + 1)) {
      if (q.size() + 1 + colour_bound(u_, p & u_.adj[v]) < target) {
        p.reset(v);
        continue;
      }
      q.push_back(v);
      chosen.set(v);
      Bits np = p & u_.adj[v];
      bool done = false;
      if (q.size() == target) {
        done = guard_.satisfied(chosen);
      } else if (guard_.feasible(chosen, np)) {
        done = descend(q, chosen, np, target);
      }
      if (done) {
        if (found_.empty()) found_ = q;
        return true;
      }
      chosen.reset(v);
      q.pop_back();
      p.reset(v);
    }
    return false;
  }

  const Universe& u_;
  CoverGuard guard_;
  Budget& budget_;
  std::size_t best_ = 0;
  std::vector<std::size_t> found_;
};

class DiversitySearch {
 public:
  DiversitySearch(const Universe& u, Budget& budget) : u_(u), budget_(budget) {}

  void run(bool symmetry) {
    std::vector<std::size_t> q;
    Bits chosen(u_.size());
    if (symmetry && u_.size() > 0) {
      q.push_back(0);
      chosen.set(0);
      consider(q, chosen);
      dfs(q, chosen, u_.adj[0]);
    } else {
      consider(q, chosen);
      dfs(q, chosen, u_.all());
    }
  }

  std::uint64_t best = 0;
  std::vector<std::size_t> witness;

 private:
  std::uint64_t gamma(const Bits& members) const { return members.count() - u_.max_degree(members); }

  void consider(const std::vector<std::size_t>& q, const Bits& chosen) {
    const std::uint64_t g = gamma(chosen);
    if (g > best) {
      best = g;
      witness = q;
    }
  }

  void dfs(std::vector<std::size_t>& q, Bits& chosen, Bits p) {
    budget_.tick();
    for (std::size_t v = p.next(0); v < p.size(); v = p.next(v + 1)) {
      // γ never decreases when members are added.
      if (gamma(chosen | p) <= best) return;
      q.push_back(v);
      chosen.set(v);
      consider(q, chosen);
      dfs(q, chosen, p & u_.adj[v]);
      chosen.reset(v);
      q.pop_back();
      p.reset(v);
    }
  }

  const Universe& u_;
  Budget& budget_;
};

}  // namespace

SearchResult max_intersecting(const GroundSpec& ground, int min_tau, const SearchOptions& options) {
  if (min_tau < 1) throw UsageError("max_intersecting needs s >= 1");
  if (ground.k() < 1) throw UsageError("max_intersecting needs k >= 1");
  Universe u(ground, options.max_candidates, true);
  // Any member of an intersecting family is a transversal, so τ <= k.
  if (min_tau > ground.k()) return SearchResult{0, Family(ground), 0, true};
  Budget budget(options.node_budget);
  CliqueSearch search(u, min_tau, budget);
  const std::size_t opt = search.maximum(options.symmetry);
  std::vector<std::size_t> w = search.lex_first(opt);
  return SearchResult{opt, u.family(w), budget.nodes(), true};
}

SearchResult max_diversity(const GroundSpec& ground, bool require_intersecting, const SearchOptions& options) {
  if (ground.k() < 1) throw UsageError("max_diversity needs k >= 1");
  Universe u(ground, options.max_candidates, require_intersecting);
  Budget budget(options.node_budget);
  DiversitySearch search(u, budget);
  search.run(options.symmetry);
  return SearchResult{search.best, u.family(search.witness), budget.nodes(), true};
}

std::uint64_t for_each_initial_intersecting(const GroundSpec& ground, const std::function<void(const Family&)>& visit,
                                            std::uint64_t node_budget) {
  const std::vector<KSet> sets = all_ksets(ground.n(), ground.k());
  const std::size_t m = sets.size();
  // Immediate predecessors under ≺ come earlier in lex order.
  std::vector<std::vector<std::size_t>> preds(m);
  for (std::size_t v = 0; v < m; ++v) {
    for (int e : sets[v].elements()) {
      if (e > 1 && !sets[v].contains(e - 1)) {
        KSet p = sets[v].without(e).with(e - 1);
        auto it = std::lower_bound(sets.begin(), sets.end(), p, LexLess{});
        preds[v].push_back(static_cast<std::size_t>(it - sets.begin()));
      }
    }
  }
  Budget budget(node_budget);
  std::vector<char> in(m, 0);
  std::vector<KSet> chosen;
  std::uint64_t count = 0;

  std::function<void(std::size_t)> go = [&](std::size_t v) {
    budget.tick();
    // Skip sets that cannot join: a missing predecessor or a disjoint member.
    while (v < m) {
      bool ok = std::all_of(preds[v].begin(), preds[v].end(), [&](std::size_t p) { return in[p] != 0; });
      if (ok) {
        for (KSet c : chosen)
          if (!c.intersects(sets[v])) {
            ok = false;
            break;
          }
      }
      if (ok) break;
      ++v;
    }
    if (v == m) {
      ++count;
      if (visit) visit(Family(ground, chosen));
      return;
    }
    in[v] = 1;
    chosen.push_back(sets[v]);
    go(v + 1);
    chosen.pop_back();
    in[v] = 0;
    go(v + 1);
  };
  go(0);
  return count;
}

namespace {

class RhoSearch {
 public:
  RhoSearch(const Universe& u, std::uint64_t threshold, Rational floor, Budget& budget)
      : u_(u), threshold_(threshold), floor_(std::move(floor)), budget_(budget) {}

  void run(bool symmetry) {
    std::vector<std::size_t> q;
    Bits chosen(u_.size());
    if (symmetry && u_.size() > 0) {
      q.push_back(0);
      chosen.set(0);
      consider(q, chosen);
      dfs(q, chosen, u_.adj[0]);
    } else {
      dfs(q, chosen, u_.all());
    }
  }

  std::optional<Rational> best;
  std::vector<std::size_t> witness;

 private:
  // Lower bound on ϱ of any F with chosen ⊆ F ⊆ chosen ∪ p and |F| > threshold.
  Rational bound(const Bits& chosen, const Bits& p) const {
    const std::uint64_t q = chosen.count();
    const std::uint64_t c = p.count();
    const std::uint64_t t_min = threshold_ + 1 > q ? threshold_ + 1 - q : 0;
    std::vector<std::uint64_t> dq, avoid;
    for (const Bits& col : u_.contains) {
      dq.push_back(chosen.and_count(col));
      avoid.push_back(c - p.and_count(col));
    }
    std::optional<Rational> lo;
    for (std::uint64_t t = t_min; t <= c; ++t) {
      std::uint64_t deg = 0;
      for (std::size_t i = 0; i < dq.size(); ++i) deg = std::max(deg, dq[i] + (t > avoid[i] ? t - avoid[i] : 0));
      Rational r(BigInt(deg), BigInt(q + t));
      if (!lo || r < *lo) lo = r;
    }
    if (!lo) return Rational(2);  // no admissible completion
    return std::max(*lo, floor_);
  }

  bool done() const { return best && *best <= floor_; }

  void consider(const std::vector<std::size_t>& q, const Bits& chosen) {
    if (q.size() <= threshold_) return;
    Rational r(BigInt(u_.max_degree(chosen)), BigInt(q.size()));
    if (!best || r < *best) {
      best = r;
      witness = q;
    }
  }

  void dfs(std::vector<std::size_t>& q, Bits& chosen, Bits p) {
    budget_.tick();
    for (std::size_t v = p.next(0); v < p.size(); v = p.next(v + 1)) {
      if (done()) return;
      if (best && bound(chosen, p) >= *best) return;
      q.push_back(v);
      chosen.set(v);
      consider(q, chosen);
      dfs(q, chosen, p & u_.adj[v]);
      chosen.reset(v);
      q.pop_back();
      p.reset(v);
    }
  }

  const Universe& u_;
  std::uint64_t threshold_;
  Rational floor_;
  Budget& budget_;
};

}  // namespace

ConjectureReport conjecture_scan(const GroundSpec& ground, const SearchOptions& options) {
  if (ground.k() < 1) throw UsageError("conjecture scan needs k >= 1");
  Universe u(ground, options.max_candidates, true);
  Budget budget(options.node_budget);
  const BigInt threshold = binom(ground.n() - 3, ground.k() - 3);
  ConjectureReport report{ground, threshold, true, std::nullopt, Family(ground)};
  if (threshold >= BigInt(u.size())) {
    report.nodes_expanded = 0;
    return report;
  }
  RhoSearch search(u, static_cast<std::uint64_t>(threshold), make_rational(ground.k(), ground.n()), budget);
  search.run(options.symmetry);
  report.nodes_expanded = budget.nodes();
  if (search.best) {
    report.vacuous = false;
    Family w = u.family(search.witness);
    report.min_rho = rho(w);
    report.witness = std::move(w);
  }
  return report;
}

std::uint64_t for_each_saturated_pair(const GroundSpec& a, const GroundSpec& b,
                                      const std::function<void(const Family&, const Family&)>& visit,
                                      std::uint64_t node_budget) {
  if (a.n() != b.n()) throw UsageError("saturated pairs need a common ground set");
  const std::vector<KSet> as = all_ksets(a.n(), a.k());
  const std::vector<KSet> bs = all_ksets(b.n(), b.k());
  std::vector<Bits> meets_a(as.size(), Bits(bs.size()));  // b-sets meeting as[i]
  std::vector<Bits> meets_b(bs.size(), Bits(as.size()));
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (as[i].intersects(bs[j])) {
        meets_a[i].set(j);
        meets_b[j].set(i);
      }
  Bits all_a(as.size()), all_b(bs.size());
  for (std::size_t i = 0; i < as.size(); ++i) all_a.set(i);
  for (std::size_t j = 0; j < bs.size(); ++j) all_b.set(j);

  auto derive_a = [&](const Bits& x) {  // b-sets meeting every member of x
    Bits r = all_b;
    for (std::size_t i = x.next(0); i < x.size(); i = x.next(i + 1)) r = r & meets_a[i];
    return r;
  };
  auto derive_b = [&](const Bits& y) {
    Bits r = all_a;
    for (std::size_t j = y.next(0); j < y.size(); j = y.next(j + 1)) r = r & meets_b[j];
    return r;
  };
  auto to_family = [](const GroundSpec& g, const std::vector<KSet>& sets, const Bits& x) {
    std::vector<KSet> out;
    for (std::size_t i = x.next(0); i < x.size(); i = x.next(i + 1)) out.push_back(sets[i]);
    return Family(g, std::move(out));
  };

  Budget budget(node_budget);
  std::uint64_t count = 0;
  Bits current = derive_b(derive_a(Bits(as.size())));
  const std::size_t m = as.size();
  while (true) {
    budget.tick();
    ++count;
    if (visit) visit(to_family(a, as, current), to_family(b, bs, derive_a(current)));
    // Next closed set in lectic order.
    bool advanced = false;
    Bits prefix = current;
    for (std::size_t i = m; i-- > 0;) {
      if (prefix.test(i)) {
        prefix.reset(i);
        continue;
      }
      Bits candidate = prefix;
      candidate.set(i);
      Bits closed = derive_b(derive_a(candidate));
      Bits added = closed.minus(prefix);
      if (added.next(0) >= i) {
        current = closed;
        advanced = true;
        break;
      }
    }
    if (!advanced) return count;
  }
}

}  // namespace ekr
