#include "ekr/binomial.hpp"

#include <mutex>
#include <vector>

#include "ekr/errors.hpp"

namespace ekr {
namespace {

// Pascal rows 0..kCachedRows-1; larger n fall back to the product formula.
constexpr std::int64_t kCachedRows = 260;

const std::vector<std::vector<BigInt>>& pascal() {
  static const std::vector<std::vector<BigInt>> rows = [] {
    std::vector<std::vector<BigInt>> r(kCachedRows);
    for (std::int64_t n = 0; n < kCachedRows; ++n) {
      r[n].resize(n + 1);
      r[n][0] = r[n][n] = 1;
      for (std::int64_t k = 1; k < n; ++k) r[n][k] = r[n - 1][k - 1] + r[n - 1][k];
    }
    return r;
  }();
  return rows;
}

}  // namespace

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n < kCachedRows) return pascal()[n][k];
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binom_u64(std::int64_t n, std::int64_t k) {
  BigInt v = binom(n, k);
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError("C(" + std::to_string(n) + "," + std::to_string(k) +
                      ") does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ekr
