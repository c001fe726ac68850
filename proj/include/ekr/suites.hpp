#pragma once

// Named property suites behind `verify suite`. Each check runs a batch of
// cases and records failures; randomised checks are deterministic in the
// seed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ekr {

struct SuiteCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure = {};

  bool passed() const noexcept { return failures == 0; }
  void record(bool ok, const std::string& what);
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;

  bool passed() const noexcept;
};

/// facts, hilton, shifting, constructions, bounds-scan, oracle.
const std::vector<std::string>& suite_names();
/// UsageError for an unknown suite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed);

// Individual checks, shared with the acceptance runner.

/// Over every initial intersecting k-family with n <= n_max: the diversity
/// bound (when n > 3k - 2), cross 2-intersection of F(1̄) with itself, and
/// ∂F(1̄) ⊆ F(1).
std::vector<SuiteCheck> check_initial_facts(int n_max, int k);
/// Random cross-intersecting pairs pushed to initial ones by plain shifting:
/// F(1̄), G(1̄) are cross 2-intersecting.
SuiteCheck check_initial_pairs(std::uint64_t seed, int count);
/// Random cross-intersecting pairs (n <= 12, a, b <= 4): the lex families of
/// the same sizes are cross-intersecting.
SuiteCheck check_hilton_lemma(std::uint64_t seed, int count);
/// Random non-trivial intersecting 3-families (n <= 12) shifted ad extremis
/// under τ >= 2: step count within the weight bound, strictly decreasing
/// weight, every pair either stable or blocked (re-checked with the naive
/// shift), and H ⊆ Ĥ.
std::vector<SuiteCheck> check_shifting_engine(std::uint64_t seed, int count);
/// Branch-and-bound f(n, k, s) against naive subfamily enumeration for every
/// ground with C(n, k) <= max_sets and every 1 <= s <= k.
SuiteCheck check_search_oracle(int max_sets);
/// Diversity, initial-family counts and the degree-ratio scan against their
/// naive counterparts on grounds with C(n, k) <= max_sets.
std::vector<SuiteCheck> check_other_oracles(int max_sets);
/// τ, ω, Ĥ and S_ij against the naive versions on random families.
std::vector<SuiteCheck> check_measure_oracles(std::uint64_t seed, int count);

}  // namespace ekr
