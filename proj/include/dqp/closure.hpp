#pragma once

// Integral closure of monomial ideals. A monomial y^a lies in the integral
// closure of I iff a lies in the Newton polyhedron conv(exponents of I) + R^n_{>=0},
// equivalently iff every monomial curve t -> (t^{w_1}, ..., t^{w_n}) with w >= 0
// gives <w, a> >= min over generators g of <w, g>.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dqp/bigint.hpp"
#include "dqp/monomial_ideal.hpp"

namespace dqp::closure {

class WeightVector {
 public:
  /// Throws ValidationError on a negative or all-zero vector.
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector from_integers(const std::vector<long long>& weights);

  const std::vector<Rational>& weights() const { return weights_; }
  int variable_count() const { return static_cast<int>(weights_.size()); }

  /// Order of vanishing of the monomial along the curve.
  Rational order_of(const Monomial& m) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> weights_;
};

/// Convex weights mu_g (one per generator, in generator order) with
/// sum mu_g * g <= exponent(m) componentwise, if any exist.
std::optional<std::vector<Rational>> newton_certificate(const MonomialIdeal& ideal, const Monomial& m);

bool in_integral_closure_newton(const MonomialIdeal& ideal, const Monomial& m);

/// Finite curve-criterion check over the supplied weight vectors.
bool in_integral_closure_valuative(const MonomialIdeal& ideal, const Monomial& m,
                                   std::span<const WeightVector> witnesses);

/// First witness that refutes membership, if any.
std::optional<WeightVector> valuative_refutation(const MonomialIdeal& ideal, const Monomial& m,
                                                 std::span<const WeightVector> witnesses);

/// Unit vectors, the all-ones vector, then `random_count` random vectors with
/// entries in 0..5 drawn from `seed`.
std::vector<WeightVector> default_witnesses(int variable_count, std::uint64_t seed,
                                            int random_count = 50);

inline constexpr int kMaxFacetEnumerationVariables = 4;

/// Inner normals of the Newton polyhedron found by brute force over
/// hyperplanes spanned by generators and coordinate directions. Contains every
/// facet normal (possibly also normals of lower-dimensional supporting faces).
/// Limited to kMaxFacetEnumerationVariables variables.
std::vector<WeightVector> newton_facet_normals(const MonomialIdeal& ideal);

/// sub ⊆ full and every generator of full is integral over sub.
bool is_reduction(const MonomialIdeal& sub, const MonomialIdeal& full);

struct ReductionGeneratorCount {
  int p;
  /// Generators of J_y(f) + J: the p partials in y and the p squares y_l^2.
  int generators;
  /// Dimension bound for the fiber of the blow-up over the origin.
  int fiber_dimension_bound;
};

ReductionGeneratorCount reduction_generator_count(int p);

}  // namespace dqp::closure
