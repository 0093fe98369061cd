#pragma once

#include <map>
#include <string>
#include <vector>

#include "dqp/bigint.hpp"

namespace dqp {

/// Sparse multivariate polynomial with integer coefficients. Zero
/// coefficients are never stored.
class SymbolicPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit SymbolicPolynomial(int variable_count) : variable_count_(variable_count) {}

  static SymbolicPolynomial constant(int variable_count, const BigInt& c);
  static SymbolicPolynomial variable(int variable_count, int index);

  int variable_count() const { return variable_count_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exponents, const BigInt& coefficient);

  SymbolicPolynomial& operator+=(const SymbolicPolynomial& other);
  SymbolicPolynomial& operator-=(const SymbolicPolynomial& other);
  friend SymbolicPolynomial operator*(const SymbolicPolynomial& lhs, const SymbolicPolynomial& rhs);

  /// Minimal total degree over the terms, i.e. the order at the origin.
  /// -1 for the zero polynomial.
  int order() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  /// Human-readable rendering with the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const SymbolicPolynomial&, const SymbolicPolynomial&) = default;

 private:
  int variable_count_;
  std::map<Exponents, BigInt> terms_;
};

}  // namespace dqp
