#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dqp/bigint.hpp"

namespace dqp {

/// Integer polynomial in one indeterminate t; coeffs[k] multiplies t^k.
/// Trailing zero coefficients are trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(const BigInt& c, int degree);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt operator()(const BigInt& t) const;

  friend IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "t^4 - t^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact Lagrange interpolation through (t_k, value_k) with distinct t_k.
/// Throws CheckFailure if the interpolant has a non-integer coefficient.
IntPolynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& samples);

}  // namespace dqp
