#pragma once

#include <string>
#include <vector>

namespace dqp::closure {

struct Monomial {
  std::vector<int> exponents;

  int variable_count() const { return static_cast<int>(exponents.size()); }
  int total_degree() const;
  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& lhs, const Monomial& rhs);

/// Monomial ideal held by its minimal generating set, sorted.
class MonomialIdeal {
 public:
  /// Throws ValidationError on an empty generator list or inconsistent lengths.
  MonomialIdeal(int variable_count, std::vector<Monomial> generators);

  int variable_count() const { return variable_count_; }
  const std::vector<Monomial>& generators() const { return generators_; }

  /// Ideal membership: some generator divides m.
  bool contains(const Monomial& m) const;
  /// Every generator of this ideal lies in `other`.
  bool is_subset_of(const MonomialIdeal& other) const;
  int min_generator_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int variable_count_;
  std::vector<Monomial> generators_;
};

/// Minimal generators of the e-th power. Requires e >= 1.
MonomialIdeal power_ideal(const MonomialIdeal& ideal, int e);

/// (y_1, ..., y_count) raised to `exponent` generator-wise: (y_1^e, ..., y_count^e).
MonomialIdeal pure_powers_ideal(int count, int exponent);

/// The maximal ideal (y_1, ..., y_count).
MonomialIdeal variables_ideal(int count);

}  // namespace dqp::closure
