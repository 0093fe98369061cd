#include "dqp/bigint.hpp"

#include <limits>

namespace dqp {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // After step i the accumulator is C(n - k + i, i), so the division is exact.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

BigInt ipow(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace dqp
