#include "ekr/measures.hpp"

#include <algorithm>
#include <unordered_set>

#include "ekr/bounds.hpp"
#include "ekr/errors.hpp"

namespace ekr {
namespace {

/// Depth-first search for transversals with elements chosen in increasing
/// order, so solutions appear in lex order.
class TransversalSearch {
 public:
  TransversalSearch(const Family& family, int target, std::uint64_t budget)
      : n_(family.n()), target_(target), budget_(budget) {
    members_.reserve(family.size());
    for (KSet s : family) members_.push_back(s.bits());
  }

  /// Stops at the first solution when `enumerate_all` is false.
  void run(bool enumerate_all) {
    enumerate_all_ = enumerate_all;
    found_.clear();
    dfs(0, 0, 0);
  }

  const std::vector<SetWord>& found() const { return found_; }

 private:
  // Returns true when the search should stop.
  bool dfs(SetWord chosen, int last, int depth) {
    if (++nodes_ > budget_) throw BudgetExceeded("transversal search exceeded " + std::to_string(budget_) + " nodes");
    const SetWord above = ~low_mask(last);
    const SetWord ground = low_mask(n_);

    // Among uncovered members pick the one whose largest still-available
    // element is smallest: the next chosen element cannot exceed it.
    int limit = n_;
    bool any_uncovered = false;
    int remaining = target_ - depth;
    int packing = 0;
    SetWord packed = 0;
    for (SetWord m : members_) {
      if (m & chosen) continue;
      any_uncovered = true;
      SetWord avail = m & above & ground;
      if (avail == 0) return false;
      limit = std::min(limit, highest_bit(avail) + 1);
      if ((avail & packed) == 0) {
        packed |= avail;
        ++packing;
      }
    }
    if (!any_uncovered) {
      if (depth == target_) {
        found_.push_back(chosen);
        return !enumerate_all_;
      }
      // Covered early: pad with larger elements in every possible way.
      return pad(chosen, last, depth);
    }
    if (remaining == 0 || packing > remaining) return false;
    int max_start = n_ - remaining + 1;
    for (int x = last + 1; x <= std::min(limit, max_start); ++x) {
      if (dfs(chosen | bit(x - 1), x, depth + 1)) return true;
    }
    return false;
  }

  bool pad(SetWord chosen, int last, int depth) {
    if (depth == target_) {
      found_.push_back(chosen);
      return !enumerate_all_;
    }
    int remaining = target_ - depth;
    for (int x = last + 1; x <= n_ - remaining + 1; ++x) {
      if (++nodes_ > budget_) throw BudgetExceeded("transversal search exceeded " + std::to_string(budget_) + " nodes");
      if (pad(chosen | bit(x - 1), x, depth + 1)) return true;
    }
    return false;
  }

  int n_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool enumerate_all_ = false;
  std::vector<SetWord> members_;
  std::vector<SetWord> found_;
};

int greedy_cover_size(const Family& family) {
  std::vector<SetWord> uncovered;
  for (KSet s : family) uncovered.push_back(s.bits());
  int size = 0;
  while (!uncovered.empty()) {
    std::vector<int> count(family.n(), 0);
    for (SetWord m : uncovered)
      for (SetWord w = m; w != 0; w &= w - 1) ++count[lowest_bit(w)];
    int best = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    std::erase_if(uncovered, [best](SetWord m) { return (m & bit(best)) != 0; });
    ++size;
  }
  return size;
}

}  // namespace

bool is_intersecting(const Family& family) {
  auto sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) return false;
  return true;
}

bool is_cross_t_intersecting(const Family& a, const Family& b, int t) {
  if (a.n() != b.n()) throw UsageError("cross-intersection test on different ground sets");
  if (t < 1) throw UsageError("cross t-intersection needs t >= 1");
  for (KSet x : a)
    for (KSet y : b)
      if (x.intersection_size(y) < t) return false;
  return true;
}

bool is_star(const Family& family) {
  SetWord common = family.ground().universe();
  for (KSet s : family) common &= s.bits();
  return common != 0;
}

std::optional<ElementSet> find_transversal(const Family& family, int t, std::uint64_t node_budget) {
  if (t < 0 || t > family.n()) return std::nullopt;
  TransversalSearch search(family, t, node_budget);
  search.run(false);
  if (search.found().empty()) return std::nullopt;
  return KSet(search.found().front());
}

Cover covering_number(const Family& family, std::uint64_t node_budget) {
  if (family.empty()) throw DomainError("covering number of the empty family is undefined");
  if (family.k() == 0) throw DomainError("covering number undefined: family contains the empty set");
  const int upper = greedy_cover_size(family);
  for (int t = 1; t <= upper; ++t) {
    if (auto w = find_transversal(family, t, node_budget)) return Cover{t, *w};
  }
  // The greedy cover has `upper` elements, so the loop always returns.
  throw std::logic_error("covering_number: no cover found up to greedy bound");
}

Family transversals(const Family& family, int t, std::uint64_t node_budget) {
  if (t < 1 || t > family.n()) throw UsageError("transversals: t must lie in [1, n]");
  TransversalSearch search(family, t, node_budget);
  search.run(true);
  std::vector<KSet> sets;
  sets.reserve(search.found().size());
  for (SetWord w : search.found()) sets.emplace_back(w);
  return Family(GroundSpec(family.n(), t), std::move(sets));
}

std::uint64_t max_degree(const Family& family) {
  auto deg = degree_vector(family);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::uint64_t diversity(const Family& family) { return family.size() - max_degree(family); }

DegreeRatio rho(const Family& family) {
  if (family.empty()) throw DomainError("degree ratio of the empty family is undefined");
  auto deg = degree_vector(family);
  auto it = std::max_element(deg.begin(), deg.end());  // first maximum = smallest element
  DegreeRatio r;
  r.element = static_cast<int>(it - deg.begin()) + 1;
  r.value = Rational(BigInt(*it), BigInt(family.size()));
  return r;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Family& family, std::uint64_t budget)
      : n_(family.n()), k_(family.k()), budget_(budget) {
    for (KSet s : family) members_.insert(s);
  }

  Clique run() {
    std::vector<int> cand;
    for (int y = 1; y <= n_; ++y) {
      if (k_ == 1 && !members_.count(KSet::of({y}))) continue;
      cand.push_back(y);
    }
    std::vector<int> q;
    dfs(q, cand);
    return best_;
  }

 private:
  // Every (k-2)-subset R of q: R ∪ {x, y} in F.
  bool extends(const std::vector<int>& q, int x, int y) const {
    const int need = k_ - 2;
    if (need < 0) return true;
    if (static_cast<int>(q.size()) < need) return true;
    KSet base = KSet::of({x, y});
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i;
    while (true) {
      KSet s = base;
      for (int i : idx) s = s.with(q[i]);
      if (!members_.count(s)) return false;
      int p = need - 1;
      while (p >= 0 && idx[p] == static_cast<int>(q.size()) - need + p) --p;
      if (p < 0) return true;
      ++idx[p];
      for (int j = p + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  void dfs(std::vector<int>& q, const std::vector<int>& cand) {
    if (++nodes_ > budget_) throw BudgetExceeded("clique search exceeded " + std::to_string(budget_) + " nodes");
    if (static_cast<int>(q.size()) > best_.size && static_cast<int>(q.size()) >= k_) {
      best_.size = static_cast<int>(q.size());
      best_.witness = KSet::from_elements(q);
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (static_cast<int>(q.size() + cand.size() - i) <= best_.size) return;
      const int x = cand[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (extends(q, x, cand[j])) next.push_back(cand[j]);
      }
      q.push_back(x);
      dfs(q, next);
      q.pop_back();
    }
  }

  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<KSet> members_;
  Clique best_;
};

}  // namespace

Clique clique_number(const Family& family, std::uint64_t node_budget) {
  if (family.empty()) throw DomainError("clique number of the empty family is undefined");
  if (family.k() == 0) throw UsageError("clique number needs k >= 1");
  return CliqueSearch(family, node_budget).run();
}

std::vector<TheoremCheck> theorem_predicates(const Family& family, const Rational& epsilon) {
  if (!is_intersecting(family)) throw UsageError("theorem predicates apply to intersecting families only");
  const std::int64_t n = family.n();
  const std::int64_t k = family.k();
  const BigInt size = family.size();
  const BigInt big_family_threshold = 48 * binom(n - 3, k - 3);
  std::vector<TheoremCheck> out;

  {
    TheoremCheck c{"main0", n > 48 * k, std::nullopt, "n > 48k implies gamma <= C(n-3,k-2)"};
    if (c.hypotheses_met) {
      BigInt bound = binom(n - 3, k - 2);
      c.conclusion_holds = BigInt(diversity(family)) <= bound;
      c.detail += "; gamma=" + std::to_string(diversity(family)) + ", bound=" + to_string(bound);
    }
    out.push_back(std::move(c));
  }
  {
    TheoremCheck c{"main1", !family.empty() && n >= 2 * k && size >= big_family_threshold, std::nullopt,
                   "n >= 2k and |F| >= 48 C(n-3,k-3) imply rho > 1/2"};
    if (c.hypotheses_met) {
      Rational r = rho(family).value;
      c.conclusion_holds = r > make_rational(1, 2);
      c.detail += "; rho=" + to_string(r);
    }
    out.push_back(std::move(c));
  }
  {
    const bool eps_ok = epsilon > 0 && epsilon <= make_rational(1, 24);
    const bool n_ok = eps_ok && Rational(n) * epsilon >= Rational(k);
    TheoremCheck c{"main2", !family.empty() && n_ok && size >= big_family_threshold, std::nullopt,
                   "0 < eps <= 1/24, n >= k/eps and |F| >= 48 C(n-3,k-3) imply rho > 2/3 - eps (eps=" +
                       to_string(epsilon) + ")"};
    if (c.hypotheses_met) {
      Rational r = rho(family).value;
      c.conclusion_holds = r > make_rational(2, 3) - epsilon;
      c.detail += "; rho=" + to_string(r);
    }
    out.push_back(std::move(c));
  }
  {
    TheoremCheck c{"main3", k >= 13 && n >= 18 * k, std::nullopt,
                   "k >= 13, n >= 18k and tau >= 3 imply |F| <= |G(n,k)|"};
    if (c.hypotheses_met) {
      // τ >= 3 is part of the hypothesis.
      c.hypotheses_met = !family.empty() && !find_transversal(family, 2).has_value();
      if (c.hypotheses_met) {
        BigInt bound = g_family_size(n, k);
        c.conclusion_holds = size <= bound;
        c.detail += "; |G(n,k)|=" + to_string(bound);
      } else {
        c.detail += "; tau < 3";
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

MeasureReport measure(const Family& family, std::uint64_t node_budget) {
  MeasureReport r{.ground = family.ground()};
  r.size = family.size();
  r.intersecting = is_intersecting(family);
  r.gamma = diversity(family);
  r.delta = max_degree(family);
  if (!family.empty() && family.k() >= 1) {
    r.tau = covering_number(family, node_budget);
    r.rho = rho(family);
    r.omega = clique_number(family, node_budget);
  }
  return r;
}

}  // namespace ekr
