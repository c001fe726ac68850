#pragma once

// Brute-force reference computations for the tests. Sets are uint32 masks
// (bit e-1 = element e), families are sorted vectors of masks. Nothing here
// calls into the library except the conversion helpers at the bottom.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ekr/family.hpp"

namespace oracle {

using Mask = std::uint32_t;
using Sets = std::vector<Mask>;
using Int = boost::multiprecision::cpp_int;

inline int popc(Mask m) { return std::popcount(m); }
inline Mask el(int e) { return Mask{1} << (e - 1); }
inline Mask range(int a, int b) {
  Mask m = 0;
  for (int e = a; e <= b; ++e) m |= el(e);
  return m;
}

inline Int binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// k-subsets of [n] in lex order (increasing tuples compared left to right).
inline Sets ksets(int n, int k) {
  Sets out;
  std::function<void(int, int, Mask)> rec = [&](int next, int left, Mask cur) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int e = next; e <= n - left + 1; ++e) rec(e + 1, left - 1, cur | el(e));
  };
  rec(1, k, 0);
  return out;
}

inline bool intersecting(const Sets& f) {
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a; b < f.size(); ++b)
      if ((f[a] & f[b]) == 0) return false;
  return true;
}

inline bool cross(const Sets& f, const Sets& g, int t = 1) {
  for (Mask a : f)
    for (Mask b : g)
      if (popc(a & b) < t) return false;
  return true;
}

inline bool hits_all(Mask t, const Sets& f) {
  return std::all_of(f.begin(), f.end(), [&](Mask s) { return (s & t) != 0; });
}

inline Sets transversals(const Sets& f, int n, int t) {
  Sets out;
  for (Mask c : ksets(n, t))
    if (hits_all(c, f)) out.push_back(c);
  return out;
}

inline int cover_number(const Sets& f, int n) {
  for (int t = 1; t <= n; ++t)
    if (!transversals(f, n, t).empty()) return t;
  return n + 1;
}

inline std::uint64_t degree(const Sets& f, int e) {
  return static_cast<std::uint64_t>(std::count_if(f.begin(), f.end(), [&](Mask s) { return (s & el(e)) != 0; }));
}

inline std::uint64_t max_degree(const Sets& f, int n) {
  std::uint64_t d = 0;
  for (int e = 1; e <= n; ++e) d = std::max(d, degree(f, e));
  return d;
}

/// S_ij exactly as defined, on a sorted family.
inline Sets shift(const Sets& f, int i, int j) {
  std::set<Mask> present(f.begin(), f.end());
  Sets out;
  for (Mask s : f) {
    Mask img = (s & el(j)) && !(s & el(i)) ? (s & ~el(j)) | el(i) : s;
    out.push_back(img != s && present.count(img) ? s : img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool same(Sets a, Sets b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline std::uint64_t weight(const Sets& f) {
  std::uint64_t w = 0;
  for (Mask s : f)
    for (int e = 1; e <= 32; ++e)
      if (s & el(e)) w += e;
  return w;
}

/// Pairs {i, j} (i < j) met by every member.
inline std::vector<std::pair<int, int>> two_cover(const Sets& f, int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (hits_all(el(i) | el(j), f)) out.emplace_back(i, j);
  return out;
}

/// The first m k-sets in lex order.
inline Sets lex_first(int n, int k, std::size_t m) {
  Sets all = ksets(n, k);
  all.resize(std::min(m, all.size()));
  return all;
}

/// f(n, k, s) by running over every subfamily of binom([n], k) as a bitmask.
/// Only for C(n, k) <= 24 or so.
inline std::size_t max_intersecting(int n, int k, int s) {
  const Sets all = ksets(n, k);
  const std::size_t m = all.size();
  std::vector<std::uint32_t> disjoint(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if ((all[a] & all[b]) == 0) disjoint[a] |= std::uint32_t{1} << b;
  // hit[t] = members met by the (s-1)-set t
  std::vector<std::uint32_t> hit;
  if (s >= 2) {
    for (Mask t : ksets(n, s - 1)) {
      std::uint32_t h = 0;
      for (std::size_t a = 0; a < m; ++a)
        if (all[a] & t) h |= std::uint32_t{1} << a;
      hit.push_back(h);
    }
  }
  std::size_t best = 0;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << m); ++fam) {
    const auto f = static_cast<std::uint32_t>(fam);
    const std::size_t size = static_cast<std::size_t>(std::popcount(f));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t rest = f; rest && ok; rest &= rest - 1) ok = (disjoint[std::countr_zero(rest)] & f) == 0;
    // τ >= s: no (s-1)-set meets every member (smaller sets are covered by supersets)
    for (std::size_t t = 0; t < hit.size() && ok; ++t) ok = (f & ~hit[t]) != 0;
    if (ok) best = size;
  }
  return best;
}

// --- conversions ---------------------------------------------------------------

inline Sets masks(const ekr::Family& f) {
  Sets out;
  for (ekr::KSet s : f) out.push_back(static_cast<Mask>(s.bits()));
  std::sort(out.begin(), out.end());
  return out;
}

inline ekr::Family family(int n, int k, const Sets& sets) {
  std::vector<ekr::KSet> v;
  for (Mask m : sets) v.emplace_back(ekr::SetWord{m});
  return ekr::Family(ekr::GroundSpec(n, k), v);
}

}  // namespace oracle
