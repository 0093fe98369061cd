#pragma once

// Points of the fiber {f = c} of the normal form f = sum_{i<=j} x_{ij} y_i y_j
// over a prime field F_p, by exhaustive enumeration.
//
// Coordinate layout of a point: the p(p+1)/2 matrix entries x_{ij} (i <= j,
// row-major), then q1 inert coordinates, then y_1..y_p.

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "dqp/bigint.hpp"
#include "dqp/univariate.hpp"

namespace dqp::ffcount {

class NormalFormSpec {
 public:
  /// Throws ValidationError unless p >= 1 and q1 >= 0.
  NormalFormSpec(int p, int q1);

  int p() const { return p_; }
  int q1() const { return q1_; }
  int matrix_variables() const { return p_ * (p_ + 1) / 2; }
  int n() const { return matrix_variables() + q1_ + p_; }
  /// Position of y_1 in the layout.
  int y_offset() const { return matrix_variables() + q1_; }

  friend bool operator==(const NormalFormSpec&, const NormalFormSpec&) = default;

 private:
  int p_;
  int q1_;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

bool is_odd_prime(std::uint64_t value);

/// Throws ValidationError unless `prime` is an odd prime below 2^31.
void check_prime(std::uint64_t prime);

/// f(point) in F_prime. Inert coordinates are ignored.
std::uint64_t eval_normal_form(const NormalFormSpec& spec, std::span<const std::uint64_t> point,
                               std::uint64_t prime);

/// (prime^p - 1) * prime^(n - p - 1).
BigInt predicted_count(const NormalFormSpec& spec, std::uint64_t prime);

/// prime^n, saturating at UINT64_MAX.
std::uint64_t total_points(const NormalFormSpec& spec, std::uint64_t prime);

struct PointCountReport {
  NormalFormSpec spec;
  std::uint64_t prime;
  std::uint64_t target;
  std::uint64_t observed_count;
  BigInt predicted_count;
  std::uint64_t enumerated;  // prime^n
  int jobs;
  std::chrono::nanoseconds elapsed;

  bool agrees() const { return predicted_count == observed_count; }
};

/// Exhaustive count of points with f = target. Throws BudgetExceeded when
/// prime^n > budget. `jobs` <= 0 selects the OpenMP default.
PointCountReport count_points(const NormalFormSpec& spec, std::uint64_t prime,
                              std::uint64_t target = 1, std::uint64_t budget = kDefaultBudget,
                              int jobs = 0);

/// (t^p - 1) * t^(n - p - 1).
IntPolynomial counting_polynomial(const NormalFormSpec& spec);

/// The first `count` odd primes: 3, 5, 7, 11, ...
std::vector<std::uint64_t> odd_primes(std::size_t count);

namespace kernels {

/// Reference: visits every point of F_prime^n in layout order and evaluates
/// f from scratch.
std::uint64_t count_serial(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target);

/// Counts f = target over linear indices [begin, end) of the enumeration in
/// which y_1..y_p are the most significant digits, followed by the matrix
/// entries and then the inert coordinates. Updates f incrementally.
std::uint64_t count_range(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target,
                          std::uint64_t begin, std::uint64_t end);

/// OpenMP version of count_range over the whole space. The y = 0 slab has
/// f = 0 and is accounted for without enumeration.
std::uint64_t count_parallel(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target,
                             int jobs);

}  // namespace kernels

}  // namespace dqp::ffcount
