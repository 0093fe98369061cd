#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dqp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) computed multiplicatively; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

BigInt pow2(int e);

BigInt ipow(const BigInt& base, unsigned e);

/// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const BigInt& v);

std::string to_string(const BigInt& v);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& v);

}  // namespace dqp
