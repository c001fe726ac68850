#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, k). Zero whenever k < 0, n < 0 or k > n, so expressions such
/// as C(n - 2k, k - 1) can be written without range guards.
BigInt binom(std::int64_t n, std::int64_t k);

/// C(n, k) as a 64-bit value; throws DomainError if it does not fit.
std::uint64_t binom_u64(std::int64_t n, std::int64_t k);

Rational make_rational(std::int64_t num, std::int64_t den);

std::string to_string(const BigInt& v);
/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& v);

}  // namespace ekr
