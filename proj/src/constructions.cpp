#include "ekr/constructions.hpp"

#include "ekr/errors.hpp"

namespace ekr {
namespace {

template <class Pred>
Family filtered(const GroundSpec& ground, Pred keep) {
  if (binom(ground.n(), ground.k()) > kMaxConstructionCandidates) {
    throw DomainError("C(" + std::to_string(ground.n()) + "," + std::to_string(ground.k()) +
                      ") is too large to enumerate");
  }
  std::vector<KSet> out;
  for (KSet s : all_ksets(ground.n(), ground.k()))
    if (keep(s)) out.push_back(s);
  return Family(ground, std::move(out));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Family full_star(const GroundSpec& ground) {
  require(ground.k() >= 1, "star needs k >= 1");
  return filtered(ground, [](KSet s) { return s.contains(1); });
}

Family hilton_milner(const GroundSpec& ground) {
  const int n = ground.n(), k = ground.k();
  require(k >= 1 && n > 2 * k, "H(n,k) needs n > 2k >= 2");
  const KSet head = KSet::interval(2, k + 1);
  return filtered(ground, [&](KSet s) { return s == head || (s.contains(1) && s.intersects(head)); });
}

Family triangle_family(const GroundSpec& ground) {
  require(ground.n() >= 3 && ground.k() >= 2, "T(n,k) needs n >= 3, k >= 2");
  const KSet t = KSet::interval(1, 3);
  return filtered(ground, [&](KSet s) { return s.intersection_size(t) >= 2; });
}

Family a_r_family(const GroundSpec& ground, int r) {
  const int n = ground.n(), k = ground.k();
  require(2 <= r && r <= k && n >= k + r, "A_r(n,k) needs 2 <= r <= k, n >= k+r");
  const KSet head = KSet::interval(2, r + 1);
  return filtered(ground, [&](KSet s) { return s.contains(1) ? s.intersects(head) : head.is_subset_of(s); });
}

std::array<KSet, 3> g_family_b_sets(int k) {
  require(k >= 3, "G(n,k) needs k >= 3");
  const KSet tail = KSet::interval(k + 2, 2 * k);
  return {KSet::interval(2, k + 1), tail.with(2), tail.with(3)};
}

Family g_family(const GroundSpec& ground) {
  const int n = ground.n(), k = ground.k();
  require(k >= 3 && n >= 2 * k, "G(n,k) needs k >= 3, n >= 2k");
  const auto b = g_family_b_sets(k);
  return filtered(ground, [&](KSet s) {
    if (s == b[0] || s == b[1] || s == b[2]) return true;
    return s.contains(1) && s.intersects(b[0]) && s.intersects(b[1]) && s.intersects(b[2]);
  });
}

Family k_family(const GroundSpec& ground, int s) {
  const int n = ground.n(), k = ground.k();
  require(s >= 1 && k >= 1 && n >= k + s - 1, "K(n,k,s) needs s >= 1, n >= k+s-1");
  const KSet block = KSet::interval(2, k + s - 1);
  return filtered(ground, [&](KSet x) {
    if (x.contains(1)) return x.intersection_size(block) >= s - 1;
    return x.is_subset_of(block);
  });
}

const std::array<KSet, 7>& fano_lines() {
  static const std::array<KSet, 7> lines = {KSet::of({1, 2, 3}), KSet::of({1, 5, 6}), KSet::of({3, 4, 5}),
                                            KSet::of({1, 4, 7}), KSet::of({2, 5, 7}), KSet::of({3, 6, 7}),
                                            KSet::of({2, 4, 6})};
  return lines;
}

Family fano_family(const GroundSpec& ground) {
  require(ground.n() >= 10 && ground.k() >= 3, "Fano family needs n >= 10, k >= 3");
  const KSet seven = KSet::interval(1, 7);
  return filtered(ground, [&](KSet s) {
    const KSet trace = s & seven;
    for (KSet line : fano_lines())
      if (trace == line) return true;
    return false;
  });
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {"star", "hm", "triangle", "ar", "g", "k", "fano", "lex"};
  return names;
}

Family build_named(std::string_view name, const GroundSpec& ground, const Params& params) {
  auto param = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw UsageError(std::string(name) + " needs parameter " + key);
    return it->second;
  };
  if (name == "star") return full_star(ground);
  if (name == "hm") return hilton_milner(ground);
  if (name == "triangle") return triangle_family(ground);
  if (name == "ar") return a_r_family(ground, static_cast<int>(param("r")));
  if (name == "g") return g_family(ground);
  if (name == "k") return k_family(ground, static_cast<int>(param("s")));
  if (name == "fano") return fano_family(ground);
  if (name == "lex") {
    const auto m = param("m");
    if (m < 0) throw DomainError("lex family needs m >= 0");
    return lex_family(ground, static_cast<std::uint64_t>(m));
  }
  throw UsageError("unknown construction '" + std::string(name) + "'");
}

}  // namespace ekr
