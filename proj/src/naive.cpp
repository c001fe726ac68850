#include "ekr/naive.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ekr/errors.hpp"

namespace ekr::naive {
namespace {

bool meets(const Set& a, const Set& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

bool hits_all(const SetFamily& f, const Set& t) {
  for (const Set& s : f)
    if (!meets(s, t)) return false;
  return true;
}

bool below(const Set& a, const Set& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

/// Subfamilies indexed by bitmasks over k_subsets(n, k).
struct Masks {
  std::vector<Set> sets;
  std::vector<std::uint32_t> disjoint;

  Masks(int n, int k) : sets(k_subsets(n, k)) {
    if (sets.size() > 22) throw UsageError("naive enumeration limited to 22 candidate sets");
    disjoint.assign(sets.size(), 0);
    for (std::size_t u = 0; u < sets.size(); ++u)
      for (std::size_t v = 0; v < sets.size(); ++v)
        if (!meets(sets[u], sets[v])) disjoint[u] |= std::uint32_t{1} << v;
  }

  std::uint64_t limit() const { return std::uint64_t{1} << sets.size(); }
  bool intersecting(std::uint64_t mask) const {
    for (std::size_t v = 0; v < sets.size(); ++v)
      if (((mask >> v) & 1) && (mask & disjoint[v])) return false;
    return true;
  }
  SetFamily family(std::uint64_t mask) const {
    SetFamily f;
    for (std::size_t v = 0; v < sets.size(); ++v)
      if ((mask >> v) & 1) f.insert(sets[v]);
    return f;
  }
};

std::uint64_t max_degree(const SetFamily& f, int n) {
  std::vector<std::uint64_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const Set& s : f)
    for (int x : s) ++deg[static_cast<std::size_t>(x)];
  return *std::max_element(deg.begin(), deg.end());
}

bool sequence_less(const SetFamily& a, const SetFamily& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

SetFamily to_sets(const Family& family) {
  SetFamily out;
  for (KSet s : family) out.insert(s.elements());
  return out;
}

Family from_sets(const GroundSpec& ground, const SetFamily& sets) {
  std::vector<KSet> out;
  for (const Set& s : sets) out.push_back(KSet::from_elements(s));
  return Family(ground, std::move(out));
}

std::vector<Set> k_subsets(int n, int k) {
  std::vector<Set> out;
  if (k < 0 || k > n) return out;
  Set cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - k + p + 1) --p;
    if (p < 0) return out;
    ++cur[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q - 1)] + 1;
  }
}

bool intersecting(const SetFamily& f) {
  for (const Set& a : f)
    for (const Set& b : f)
      if (!meets(a, b)) return false;
  return true;
}

std::optional<std::pair<int, Set>> cover(const SetFamily& f, int n) {
  if (f.empty()) return std::nullopt;
  for (int t = 0; t <= n; ++t)
    for (const Set& c : k_subsets(n, t))
      if (hits_all(f, c)) return std::make_pair(t, c);
  return std::nullopt;
}

std::pair<int, Set> clique(const SetFamily& f, int n, int k) {
  for (int q = n; q >= k; --q) {
    for (const Set& c : k_subsets(n, q)) {
      bool all = true;
      for (const Set& sub : k_subsets(q, k)) {
        Set s;
        for (int idx : sub) s.push_back(c[static_cast<std::size_t>(idx - 1)]);
        if (!f.count(s)) {
          all = false;
          break;
        }
      }
      if (all) return {q, c};
    }
  }
  return {0, {}};
}

std::vector<std::pair<int, int>> two_covers(const SetFamily& f, int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (hits_all(f, {i, j})) out.emplace_back(i, j);
  return out;
}

SetFamily shift(const SetFamily& f, int i, int j) {
  SetFamily out;
  for (const Set& s : f) {
    const bool has_j = std::find(s.begin(), s.end(), j) != s.end();
    const bool has_i = std::find(s.begin(), s.end(), i) != s.end();
    if (has_j && !has_i) {
      Set image;
      for (int x : s) image.push_back(x == j ? i : x);
      std::sort(image.begin(), image.end());
      if (!f.count(image)) {
        out.insert(image);
        continue;
      }
    }
    out.insert(s);
  }
  return out;
}

bool initial(const SetFamily& f, int n, int k) {
  const auto all = k_subsets(n, k);
  for (const Set& b : f)
    for (const Set& a : all)
      if (below(a, b) && !f.count(a)) return false;
  return true;
}

Optimum max_intersecting(int n, int k, int s) {
  Masks m(n, k);
  Optimum best;
  bool found = false;
  for (std::uint64_t mask = 1; mask < m.limit(); ++mask) {
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    if (found && size < best.value) continue;
    if (!m.intersecting(mask)) continue;
    SetFamily f = m.family(mask);
    auto c = cover(f, n);
    if (!c || c->first < s) continue;
    if (!found || size > best.value || sequence_less(f, best.witness)) {
      best.value = size;
      best.witness = std::move(f);
      found = true;
    }
  }
  return best;
}

Optimum max_diversity(int n, int k) {
  Masks m(n, k);
  Optimum best;
  for (std::uint64_t mask = 1; mask < m.limit(); ++mask) {
    if (!m.intersecting(mask)) continue;
    SetFamily f = m.family(mask);
    const std::uint64_t gamma = f.size() - max_degree(f, n);
    if (gamma > best.value || (gamma == best.value && sequence_less(f, best.witness))) {
      best.value = gamma;
      best.witness = std::move(f);
    }
  }
  return best;
}

std::uint64_t count_initial_intersecting(int n, int k) {
  Masks m(n, k);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < m.limit(); ++mask) {
    if (!m.intersecting(mask)) continue;
    if (initial(m.family(mask), n, k)) ++count;
  }
  return count;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> min_rho(int n, int k, std::uint64_t threshold) {
  Masks m(n, k);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (std::uint64_t mask = 1; mask < m.limit(); ++mask) {
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    if (size <= threshold || !m.intersecting(mask)) continue;
    const std::uint64_t delta = max_degree(m.family(mask), n);
    if (!best || delta * best->second < best->first * size) best = std::make_pair(delta, size);
  }
  if (best) {
    const std::uint64_t g = std::gcd(best->first, best->second);
    best->first /= g;
    best->second /= g;
  }
  return best;
}

}  // namespace ekr::naive
