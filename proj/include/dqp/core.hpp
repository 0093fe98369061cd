#pragma once

// Closed-form invariants of D(q,p) hypersurface germs: the normal form
// [y]^t [X] [y] + y_{p+1}^2 + ... + y_{p+k}^2 on C^n with X a generic
// symmetric p x p matrix of coordinates and q the singular-locus dimension.

#include <string>
#include <vector>

#include "dqp/bigint.hpp"

namespace dqp {

/// p(p+1)/2, the number of independent entries of a symmetric p x p matrix.
constexpr int symmetric_entry_count(int p) { return p * (p + 1) / 2; }

class DqpParams {
 public:
  int n() const { return n_; }
  int q() const { return q_; }
  int p() const { return p_; }
  /// Number of square terms in the normal form.
  int k() const { return n_ - q_ - p_; }
  /// Number of coordinates that do not appear in the normal form.
  int q1() const { return q_ - symmetric_entry_count(p_); }

  /// The germ with q1 = k = 0, i.e. n = p(p+1)/2 + p.
  static DqpParams minimal(int p);

  friend bool operator==(const DqpParams&, const DqpParams&) = default;

 private:
  DqpParams(int n, int q, int p) : n_(n), q_(q), p_(p) {}
  friend DqpParams validate_params(long long n, long long q, long long p);

  int n_;
  int q_;
  int p_;
};

/// Throws ValidationError naming the first violated inequality.
DqpParams validate_params(long long n, long long q, long long p);

struct FixedCycle {
  std::string name;
  int dimension;
  int cycle_multiplicity;
};

/// Lê numbers indexed by dimension d = 0..q, zero-filled.
struct LeNumberTable {
  DqpParams params;
  std::vector<BigInt> entries;
  std::vector<FixedCycle> fixed_cycles;

  const BigInt& at(int d) const { return entries.at(static_cast<std::size_t>(d)); }
};

/// Polar multiplicities of Sigma_1(p) at the zero matrix, indexed by
/// dimension d = 0..p(p+1)/2 - 1 (Sigma_1 is a hypersurface in C^{p(p+1)/2}).
struct PolarMultiplicityTable {
  int p;
  std::vector<BigInt> entries;

  const BigInt& at(int d) const { return entries.at(static_cast<std::size_t>(d)); }
  int top_dimension() const { return symmetric_entry_count(p) - 1; }
};

/// The Milnor fiber is homotopic to a sphere of this dimension.
int milnor_sphere_dimension(const DqpParams& params);

int reduced_euler_characteristic(const DqpParams& params);

LeNumberTable le_numbers(const DqpParams& params);

PolarMultiplicityTable polar_multiplicities_sigma1(int p);

/// Euler obstruction of Sigma_1(p) at the origin, from the alternating sum of
/// its polar multiplicities; throws CheckFailure if that sum disagrees with
/// the parity rule.
int euler_obstruction_sigma1(int p);

/// Signed alternating sum of polar multiplicities, top term positive.
BigInt polar_alternating_sum(const PolarMultiplicityTable& table);

/// Euler obstruction of X = f^{-1}(0) at the origin. Requires p > 1.
int euler_obstruction_hypersurface(const DqpParams& params);

/// Sum_{i=0..p} (-1)^{(n-1)-(q-i)} lambda^{q-i}.
BigInt massey_alternating_sum(const LeNumberTable& table);

/// True iff the alternating Lê sum equals the reduced Euler characteristic.
bool verify_massey_identity(const DqpParams& params);

}  // namespace dqp
